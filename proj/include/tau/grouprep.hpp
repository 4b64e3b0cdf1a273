#pragma once

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "tau/algebra.hpp"

namespace tau {

using Perm = std::vector<int>;

struct NotSubgroup : std::invalid_argument {
    NotSubgroup() : std::invalid_argument("words do not give the subgroup generators") {}
};
struct NotNormal : std::invalid_argument {
    NotNormal() : std::invalid_argument("subgroup is not normal") {}
};

// (a * b)(i) = a(b(i)).
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inv(const Perm& a);
Perm perm_identity(std::size_t degree);
// Product of disjoint or overlapping cycles such as "(1 2 3)(4 5)", 1-based.
Perm parse_cycles(const std::string& text, std::size_t degree);
std::string cycles_to_string(const Perm& p);

// Permutation group with all elements enumerated breadth-first from the
// identity: element k = generator(word_gen(k)) * element(word_parent(k)).
class PermGroup {
public:
    explicit PermGroup(std::vector<Perm> generators);

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& generators() const { return gens_; }
    const Perm& element(std::size_t i) const { return elements_[i]; }
    const std::vector<Perm>& elements() const { return elements_; }
    std::size_t index_of(const Perm& p) const;  // npos if absent
    bool contains(const Perm& p) const { return index_of(p) != std::size_t(-1); }
    std::size_t word_parent(std::size_t k) const { return parent_[k]; }
    std::size_t word_gen(std::size_t k) const { return via_[k]; }
    // Letters a, b, c, ... name the generators; upper case is the inverse.
    Perm eval_word(const std::string& word) const;
    std::vector<std::vector<std::size_t>> conjugacy_classes() const;

private:
    std::size_t degree_;
    std::vector<Perm> gens_;
    std::vector<Perm> elements_;
    std::vector<std::size_t> parent_, via_;
    std::map<Perm, std::size_t> index_;
};

// Group algebra with basis the group elements and generators the group generators.
struct GroupAlgebra {
    PermGroup group;
    const Field* field;
    std::unique_ptr<Algebra> algebra;
    std::string name;

    GroupAlgebra(PermGroup g, const Field& f, std::string name = "");
    // Matrix of element i acting on u, by word evaluation.
    Matrix element_matrix(const AMod& u, std::size_t i) const;
    // All element matrices of u, indexed like group elements.
    std::vector<Matrix> element_matrices(const AMod& u) const;
    AMod module(std::vector<Matrix> gens) const { return AMod(*algebra, std::move(gens)); }
};

AMod trivial_module(const GroupAlgebra& h);
AMod tensor_modules(const AMod& u, const AMod& v);
// Valid representation: generator matrices invertible and every element matrix
// well defined.
bool is_group_module(const GroupAlgebra& h, const AMod& u);

// G normal in G~, with the generators of G given as words in those of G~.
struct NormalPair {
    const GroupAlgebra* g;
    const GroupAlgebra* gt;
    std::vector<std::string> words;
    std::vector<std::size_t> cosets;    // G~ element indices of coset representatives
    std::vector<std::size_t> coset_of;  // coset index of each G~ element
    std::vector<std::size_t> g_in_gt;   // G~ index of each G element

    NormalPair(const GroupAlgebra& g, const GroupAlgebra& gt, std::vector<std::string> words);
    std::size_t index() const { return cosets.size(); }
    // G element index of t_j^{-1} x t_i, where x t_i lies in coset j.
    std::size_t twist(std::size_t x, std::size_t i, std::size_t& j) const;
};

AMod restrict_module(const AMod& u, const NormalPair& np);
AMod induce_module(const AMod& u, const NormalPair& np);
// G acts on the result through g -> x^{-1} g x; x is a G~ element index.
AMod conjugate_module(std::size_t x, const AMod& u, const NormalPair& np);
bool mackey_check(const AMod& u, const NormalPair& np);

struct BlockIdem {
    Vec idempotent;                    // in group algebra coordinates
    std::shared_ptr<Algebra> algebra;  // eA with unit e and generators e*g_s
    Matrix basis;                      // columns: basis of eA in group algebra coordinates
    bool principal = false;
};

std::vector<BlockIdem> central_primitive_idempotents(const GroupAlgebra& h);
// e*u as a module over the block algebra.
AMod block_cut(const BlockIdem& b, const AMod& u);
// A block module viewed as a module over the whole group algebra.
AMod inflate_block_module(const GroupAlgebra& h, const AMod& m);
bool covers(const BlockIdem& btilde, const BlockIdem& b, const NormalPair& np);
// Elements of G~ fixing e_B under conjugation, as a generator list: those of G
// followed by stabilizing coset representatives.
std::vector<Perm> inertia_of_block(const BlockIdem& b, const NormalPair& np);

// Quotient of a random PIM by a random cyclic submodule, optionally summed with
// another such module.
AMod random_module(const Algebra& a, std::mt19937_64& rng);

}  // namespace tau
