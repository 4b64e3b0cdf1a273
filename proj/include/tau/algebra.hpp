#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tau/exactfield.hpp"

namespace tau {

struct FieldNotSplitting : std::runtime_error {
    unsigned degree;
    explicit FieldNotSplitting(unsigned d)
        : std::runtime_error("field not splitting: extension of degree " + std::to_string(d) + " required"),
          degree(d)
    {
    }
};

struct ZeroModule : std::runtime_error {
    ZeroModule() : std::runtime_error("operation undefined on the zero module") {}
};

struct NotSymmetric : std::runtime_error {
    NotSymmetric() : std::runtime_error("algebra has no symmetric form") {}
};

class AMod;
struct Structure;

// Finite-dimensional associative algebra given by its left-regular matrices:
// column j of left(i) holds the coordinates of b_i * b_j.
class Algebra {
public:
    Algebra(const Field& f, std::vector<Matrix> left_regular, Vec unit, std::vector<Vec> generators,
            std::optional<Vec> symmetric_form = std::nullopt, std::string name = "");
    ~Algebra();
    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    const Field& field() const { return *field_; }
    std::size_t dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const Matrix& left(std::size_t i) const { return left_[i]; }
    const Vec& unit() const { return unit_; }
    // Algebra generators as elements; modules are given by their action.
    const std::vector<Vec>& generators() const { return gens_; }
    std::size_t num_generators() const { return gens_.size(); }
    const Matrix& gen_left(std::size_t s) const { return gen_left_[s]; }
    const std::optional<Vec>& symmetric_form() const { return form_; }
    bool is_symmetric() const { return form_.has_value(); }

    Vec basis_vector(std::size_t i) const;
    Vec mul(const Vec& a, const Vec& b) const;
    Matrix left_matrix(const Vec& a) const;
    Matrix gram() const;

    // Word basis: w_0 = 1 and w_k = g_{word_gen(k)} * w_{word_parent(k)}.
    std::size_t word_parent(std::size_t k) const { return word_parent_[k]; }
    std::size_t word_gen(std::size_t k) const { return word_gen_[k]; }
    // Coordinates of an algebra element in the word basis.
    Vec to_word_coords(const Vec& a) const { return basis_to_word_.apply(a); }

    bool check_associative() const;

    // Opposite algebra; opposite().opposite() is this object.
    const Algebra& opposite() const;
    // Simples, PIMs and the radical; computed once on first use.
    const Structure& structure() const;
    Matrix radical() const;

private:
    Algebra() = default;

    const Field* field_ = nullptr;
    std::size_t dim_ = 0;
    std::vector<Matrix> left_;
    Vec unit_;
    std::vector<Vec> gens_;
    std::vector<Matrix> gen_left_;
    std::optional<Vec> form_;
    std::string name_;
    std::vector<std::size_t> word_parent_, word_gen_;
    Matrix basis_to_word_;

    mutable std::once_flag op_once_, st_once_;
    mutable std::unique_ptr<Algebra> op_owned_;
    mutable const Algebra* op_ = nullptr;
    mutable std::unique_ptr<Structure> structure_;

    void build_words();
};

// Spinning data of a module: a basis reached from seed vectors by applying
// generators, plus the linear relations closing it under the generators.
struct SpinData {
    Matrix basis;      // columns b_k
    Matrix basis_inv;  // inverse of basis
    std::vector<std::size_t> seed_of;
    std::vector<std::size_t> parent;  // meaningful for non-seed vectors
    std::vector<std::size_t> via;     // generator index, meaningful for non-seed vectors
    std::vector<std::size_t> seeds;   // positions of seed vectors
    struct Relation {
        std::size_t gen;
        std::size_t from;
        Vec coeffs;  // gen * b_from = sum coeffs[k] b_k
    };
    std::vector<Relation> relations;
};

// Left module over an Algebra given by one matrix per algebra generator.
// Copies share storage; values are immutable.
class AMod {
public:
    AMod() = default;
    AMod(const Algebra& a, std::vector<Matrix> gen_action);
    static AMod zero(const Algebra& a);
    static AMod regular(const Algebra& a);

    bool valid() const { return data_ != nullptr; }
    const Algebra& algebra() const { return *data_->alg; }
    std::size_t dim() const { return data_->dim; }
    const Field& field() const { return data_->alg->field(); }
    const Matrix& gen(std::size_t s) const { return data_->gens[s]; }
    const std::vector<Matrix>& gens() const { return data_->gens; }

    // rho(a) for an algebra element a.
    Matrix act(const Vec& a) const;
    // rho(a) v, evaluated through the word basis without forming rho(a).
    Vec act_on(const Vec& a, const Vec& v) const;
    // Vectors rho(w_k) v for the whole word basis, as columns.
    Matrix orbit(const Vec& v) const;
    const SpinData& spin() const;
    // Full representation check over the word basis.
    bool check_relations() const;

private:
    struct Data {
        const Algebra* alg;
        std::size_t dim;
        std::vector<Matrix> gens;
        mutable std::once_flag spin_once;
        mutable std::unique_ptr<SpinData> spin;
    };
    std::shared_ptr<Data> data_;
};

struct ModMap {
    AMod source;
    AMod target;
    Matrix matrix;  // target.dim x source.dim
};

struct Structure {
    Matrix radical;                  // columns span J(A)
    Matrix radical_words;            // the same columns in word coordinates
    std::vector<AMod> simples;       // simples[i] = top of pims[i]
    std::vector<AMod> pims;          // basis vector 0 generates pims[i]
    std::vector<Matrix> pim_radical; // columns span Rad pims[i]
    std::size_t count() const { return pims.size(); }
};

// Linear algebra on modules.
std::vector<Matrix> hom_basis(const AMod& m, const AMod& n);
std::size_t hom_dim(const AMod& m, const AMod& n);
bool is_hom(const AMod& m, const AMod& n, const Matrix& f);
// Smallest submodule containing the given columns; returns a basis.
Matrix spin_closure(const AMod& m, const Matrix& vectors);
// Module on the span of the columns of `basis`, which must be a submodule.
AMod restrict_to(const AMod& m, const Matrix& basis);
ModMap submodule(const AMod& m, const Matrix& vectors);
// Quotient by the submodule spanned by the columns of `sub` (closed under the action).
ModMap quotient(const AMod& m, const Matrix& sub);
ModMap kernel(const ModMap& f);
ModMap image(const ModMap& f);
ModMap cokernel(const ModMap& f);
AMod direct_sum(const Algebra& a, const std::vector<AMod>& parts);
AMod direct_sum(const AMod& x, const AMod& y);
// Same module with basis changed by the invertible matrix t (new vectors as columns).
AMod change_basis(const AMod& m, const Matrix& t);

// Jacobson radical from left-regular matrices over the prime field of f.
// Returns a basis of J as columns.
Matrix trace_form_radical(const Field& f, const std::vector<Matrix>& left_regular);
Matrix algebra_radical(const Algebra& a);
// Radical of a subalgebra of End(V) spanned by the given matrices (which must
// contain the identity in their span).
Matrix matrix_algebra_radical(const std::vector<Matrix>& basis);

struct Summand {
    AMod module;
    Matrix inclusion;   // into the decomposed module
    Matrix projection;  // onto the summand, projection * inclusion = I
};

// Krull-Schmidt decomposition. Each returned summand is indecomposable with split
// endomorphism ring modulo its radical.
std::vector<Summand> decompose_summands(const AMod& m, std::uint64_t seed = 0);
std::vector<std::pair<AMod, std::size_t>> decompose(const AMod& m, std::uint64_t seed = 0);
// Isomorphism test for two indecomposable modules.
bool is_iso_indecomposable(const AMod& x, const AMod& y);
bool is_iso(const AMod& m, const AMod& n, std::uint64_t seed = 0);
// Radical of Hom(x, y) between indecomposables: all of Hom if x and y are not
// isomorphic, otherwise the non-invertible maps.
std::vector<Matrix> radical_homs(const AMod& x, const AMod& y);
std::vector<Matrix> radical_endos(const AMod& x);

// Operations needing the simples and PIMs of the algebra.
std::vector<std::size_t> composition_vector(const AMod& m);
std::size_t s_count(const AMod& m);
ModMap radical_mod(const AMod& m);
AMod top(const AMod& m);
struct ProjectiveCover {
    AMod projective;
    Matrix map;                      // projective -> module, surjective
    std::vector<std::size_t> mult;   // multiplicity of each PIM
};
ProjectiveCover projective_cover(const AMod& m);
AMod syzygy(const AMod& m);
AMod cosyzygy(const AMod& m);
bool is_projective(const AMod& m);
struct Presentation {
    AMod p1, p0;
    Matrix f1;  // p1 -> p0
    std::vector<std::size_t> mult1, mult0;
};
Presentation minimal_presentation(const AMod& m);
std::size_t ext1_dim(const AMod& m, const AMod& n);
AMod dual_module(const AMod& m);
AMod tau(const AMod& m);
AMod tau_inv(const AMod& m);
// Index of the PIM isomorphic to the indecomposable projective p, or npos.
std::size_t pim_index(const AMod& p);

}  // namespace tau
