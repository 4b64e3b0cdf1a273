#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace tau {

using Scalar = std::uint16_t;
using Vec = std::vector<Scalar>;

struct NoSolution : std::runtime_error {
    NoSolution() : std::runtime_error("linear system has no solution") {}
};

// F_{p^m}. Elements are encoded as integers sum c_i p^i where c_i are the
// coefficients of the residue modulo the defining polynomial.
class Field {
public:
    static const Field& get(unsigned p, unsigned m = 1);

    unsigned p() const { return p_; }
    unsigned m() const { return m_; }
    unsigned q() const { return q_; }
    bool is_prime() const { return m_ == 1; }
    const std::vector<unsigned>& defining_poly() const { return poly_; }

    Scalar add(Scalar a, Scalar b) const
    {
        if (m_ == 1) {
            unsigned s = unsigned(a) + b;
            return Scalar(s >= p_ ? s - p_ : s);
        }
        return add_digits(a, b);
    }
    Scalar neg(Scalar a) const { return neg_[a]; }
    Scalar sub(Scalar a, Scalar b) const { return add(a, neg_[b]); }
    Scalar mul(Scalar a, Scalar b) const
    {
        if (a == 0 || b == 0)
            return 0;
        if (m_ == 1)
            return Scalar((unsigned(a) * b) % p_);
        unsigned e = unsigned(log_[a]) + log_[b];
        if (e >= q_ - 1)
            e -= q_ - 1;
        return exp_[e];
    }
    Scalar inv(Scalar a) const;
    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
    Scalar pow(Scalar a, std::uint64_t e) const;
    Scalar from_int(long long v) const;
    // Integer lift of a prime-field element; meaningful only when m == 1.
    unsigned lift(Scalar a) const { return a; }
    Scalar primitive() const { return exp_.size() > 1 ? exp_[1] : Scalar(1); }
    // Multiplicative order of a nonzero element.
    unsigned order(Scalar a) const;
    Scalar random(std::mt19937_64& rng) const { return Scalar(rng() % q_); }
    Scalar random_nonzero(std::mt19937_64& rng) const { return Scalar(1 + rng() % (q_ - 1)); }
    std::string to_string(Scalar a) const;

    Field(unsigned p, unsigned m);

private:
    Scalar add_digits(Scalar a, Scalar b) const;

    unsigned p_, m_, q_;
    std::vector<unsigned> poly_;
    std::vector<Scalar> exp_, log_, neg_, add_table_;
};

bool is_prime(unsigned n);

class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& f, std::size_t rows, std::size_t cols);
    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_ints(const Field& f, std::size_t rows, std::size_t cols,
                            const std::vector<long long>& entries);
    static Matrix column(const Field& f, const Vec& v);
    static Matrix random(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return *field_; }
    bool has_field() const { return field_ != nullptr; }

    Scalar operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar* row(std::size_t i) const { return data_.data() + i * cols_; }
    Scalar* row(std::size_t i) { return data_.data() + i * cols_; }
    const Vec& data() const { return data_; }

    Vec col(std::size_t j) const;
    void set_col(std::size_t j, const Vec& v);
    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix select_cols(const std::vector<std::size_t>& idx) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix scaled(Scalar c) const;
    bool is_zero() const;
    bool is_identity() const;
    Vec apply(const Vec& v) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix& operator+=(const Matrix& o);
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    // this += c * o
    void axpy(Scalar c, const Matrix& o);

private:
    const Field* field_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    Vec data_;
};

Matrix hstack(const std::vector<Matrix>& parts, const Field& f, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& parts, const Field& f, std::size_t cols);
Matrix block_diag(const std::vector<Matrix>& parts, const Field& f);

struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Rref mat_rref(const Matrix& a);
std::size_t mat_rank(const Matrix& a);
std::optional<Matrix> mat_try_solve(const Matrix& a, const Matrix& b);
Matrix mat_solve(const Matrix& a, const Matrix& b);
Matrix mat_nullspace(const Matrix& a);
Matrix mat_kron(const Matrix& a, const Matrix& b);
std::optional<Matrix> mat_inverse(const Matrix& a);
Matrix mat_pow(const Matrix& a, std::uint64_t e);
// Left inverse of a matrix with independent columns.
Matrix mat_left_inverse(const Matrix& b);
// Basis of the column space, as a subset of the columns.
Matrix col_basis(const Matrix& a);
// Columns of `a` completed by standard vectors to a basis; returns indices of the
// standard vectors used.
std::vector<std::size_t> complement_indices(const Matrix& a);

// Incremental row echelon form of a set of vectors of fixed length. Optionally
// records, for each stored row, its expression in the inserted vectors.
class Echelon {
public:
    Echelon(const Field& f, std::size_t len, bool track = false);
    std::size_t len() const { return len_; }
    std::size_t rank() const { return rows_.size(); }
    const Field& field() const { return *f_; }

    // Reduces v in place; returns true if the residual is zero. When tracking,
    // coeffs receives the expression of (original v - residual) in terms of the
    // inserted vectors.
    bool reduce(Vec& v, Vec* coeffs = nullptr) const;
    bool contains(Vec v) const { return reduce(v); }
    // Inserts v if independent. Returns true when inserted.
    bool insert(Vec v);
    // Coordinates of v in the inserted vectors; requires tracking.
    std::optional<Vec> express(Vec v) const;
    const std::vector<Vec>& inserted() const { return inserted_; }
    // Reduced rows, each with 1 at its pivot and 0 at the other pivots.
    const std::vector<Vec>& rows() const { return rows_; }

private:
    const Field* f_;
    std::size_t len_;
    bool track_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> piv_;
    std::vector<Vec> trans_;
    std::vector<Vec> inserted_;
};

// Dense polynomials, coefficient i is the coefficient of x^i; no trailing zeros.
using Poly = std::vector<Scalar>;

namespace poly {
void trim(Poly& a);
std::size_t deg(const Poly& a);  // deg of zero polynomial is reported as 0
bool is_zero(const Poly& a);
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
void divmod(const Field& f, const Poly& a, const Poly& b, Poly& quo, Poly& rem);
Poly mod(const Field& f, const Poly& a, const Poly& b);
Poly gcd(const Field& f, Poly a, Poly b);
Poly monic(const Field& f, const Poly& a);
// Returns g = gcd(a, b) monic and s with s*a = g mod b.
Poly inverse_mod(const Field& f, const Poly& a, const Poly& m);
Poly powmod(const Field& f, const Poly& a, std::uint64_t e, const Poly& m);
Poly derivative(const Field& f, const Poly& a);
Scalar eval(const Field& f, const Poly& a, Scalar x);
Matrix eval(const Poly& a, const Matrix& x);
std::vector<Scalar> roots(const Field& f, const Poly& a);

struct Factor {
    Poly base;                 // monic, squarefree, all irreducible factors of degree `degree`
    unsigned degree = 1;       // degree of the irreducible factors in base
    unsigned multiplicity = 1; // base^multiplicity divides exactly
};
// Coprime factorization: linear factors split individually, the rest grouped by
// distinct degree. Product of base^multiplicity equals monic(a).
std::vector<Factor> coprime_factors(const Field& f, const Poly& a);
bool is_irreducible(const Field& f, const Poly& a);
}  // namespace poly

// Minimal polynomial of a square matrix (monic).
Poly min_poly(const Matrix& a);

}  // namespace tau
