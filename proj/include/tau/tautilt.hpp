#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tau/algebra.hpp"

namespace tau {

struct IndexOutOfRange : std::out_of_range {
    IndexOutOfRange() : std::out_of_range("summand index out of range") {}
};

// Support tau-tilting pair (M, P): basic M given by its indecomposable parts, P
// by PIMs of the algebra.
struct STiltPair {
    std::vector<AMod> m_parts;
    std::vector<AMod> p_parts;

    const Algebra& algebra() const;
    AMod m_module() const;
    AMod p_module() const;
    std::size_t size() const { return m_parts.size() + p_parts.size(); }
};

using Semibrick = std::vector<AMod>;

struct TwoTermComplex {
    AMod p1, p0;
    Matrix d;  // p1 -> p0
    std::vector<std::size_t> mult1, mult0;  // PIM multiplicities, filled when known
};

struct TwoSMC {
    std::vector<AMod> degree0;
    std::vector<AMod> degree1;  // understood shifted by one
};

struct HasseArrow {
    std::size_t from, to;
    std::size_t summand;  // index into m_parts of the source
    AMod label;
};

struct HasseQuiver {
    std::vector<STiltPair> vertices;
    std::vector<HasseArrow> arrows;
    bool complete = true;  // false when max_vertices was reached
};

// Pair (basic regular module, 0) and (0, basic regular module).
STiltPair top_pair(const Algebra& a);
STiltPair bottom_pair(const Algebra& a);
// Checks the pair invariants.
bool is_valid_pair(const STiltPair& x);

bool is_tau_rigid(const AMod& m);
bool is_support_tau_tilting(const AMod& m);
// Sum of images of all maps m -> v, as columns of a basis.
Matrix trace(const AMod& m, const AMod& v);
bool in_fac(const AMod& m, const AMod& v);
// v embeds into a direct sum of copies of n.
bool in_sub(const AMod& n, const AMod& v);
bool in_torsion_closure(const AMod& s, const AMod& v);

// Left mutation at m_parts[at]; nullopt when no left mutation exists there.
std::optional<STiltPair> left_mutation(const STiltPair& x, std::size_t at);
// X / R(M, X); the zero module when no left mutation exists at X.
AMod brick_label(const STiltPair& x, std::size_t at);
Semibrick left_semibrick(const STiltPair& x);
AMod dual_pair(const STiltPair& x);
Semibrick right_semibrick(const AMod& n);
// Pairwise non-isomorphic pairs with equal P and isomorphic M.
bool same_pair(const STiltPair& x, const STiltPair& y);
bool fac_leq(const STiltPair& y, const STiltPair& x);  // Fac M_y within Fac M_x

// Worker count from TAUTILT_THREADS, else hardware concurrency.
unsigned worker_count();
HasseQuiver enumerate_hasse(const Algebra& a, std::size_t max_vertices = 10000, unsigned threads = 0);

TwoTermComplex two_term_silting(const STiltPair& x);
bool is_two_term_presilting(const TwoTermComplex& t);
std::vector<long> g_vector(const TwoTermComplex& t);
TwoSMC two_smc(const STiltPair& x);
bool validate_two_smc(const TwoSMC& c);

// Multiplicity of each PIM in a projective module.
std::vector<std::size_t> pim_multiplicities(const AMod& p);

}  // namespace tau
