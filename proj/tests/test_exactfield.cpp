#include "doctest.h"
#include "tau/exactfield.hpp"

#include <cmath>
#include <set>

using namespace tau;

namespace {

// Rank by counting the distinct vectors in the row space: q^rank of them.
std::size_t brute_rank(const Matrix& a)
{
    const Field& f = a.field();
    std::set<Vec> span;
    std::size_t total = 1;
    for (std::size_t i = 0; i < a.rows(); ++i)
        total *= f.q();
    for (std::size_t code = 0; code < total; ++code) {
        Vec v(a.cols(), 0);
        std::size_t c = code;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            Scalar s = Scalar(c % f.q());
            c /= f.q();
            for (std::size_t j = 0; j < a.cols(); ++j)
                v[j] = f.add(v[j], f.mul(s, a(i, j)));
        }
        span.insert(v);
    }
    std::size_t r = 0, n = 1;
    while (n < span.size()) {
        n *= f.q();
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("field axioms on random scalars")
{
    std::mt19937_64 rng(7);
    for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {5u, 1u}, {5u, 2u}, {3u, 3u}, {2u, 4u}}) {
        const Field& f = Field::get(p, m);
        CHECK(f.q() == unsigned(std::pow(p, m)));
        CHECK(poly::is_irreducible(Field::get(p), Poly(f.defining_poly().begin(), f.defining_poly().end())));
        for (int t = 0; t < 200; ++t) {
            Scalar a = f.random(rng), b = f.random(rng), c = f.random(rng);
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a)
                CHECK(f.mul(a, f.inv(a)) == 1);
        }
        CHECK(f.order(f.primitive()) == f.q() - 1);
    }
}

TEST_CASE("mat_rank examples")
{
    const Field& f5 = Field::get(5);
    const Field& f3 = Field::get(3);
    CHECK(mat_rank(Matrix::identity(f5, 3)) == 3);
    CHECK(mat_rank(Matrix(f3, 2, 4)) == 0);
    CHECK(mat_rank(Matrix::from_ints(f5, 2, 2, {1, 2, 2, 4})) == 1);
}

TEST_CASE("mat_rank agrees with transpose and with a brute-force count")
{
    std::mt19937_64 rng(11);
    const Field& f = Field::get(3);
    for (int t = 0; t < 40; ++t) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
        Matrix a = Matrix::random(f, r, c, rng);
        if (t % 3 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j)
                a.at(r - 1, j) = f.add(a(0, j), a(0, j));
        CHECK(mat_rank(a) == mat_rank(a.transpose()));
        CHECK(mat_rank(a) == brute_rank(a));
    }
}

TEST_CASE("mat_solve examples")
{
    const Field& f = Field::get(5);
    auto x = mat_solve(Matrix::from_ints(f, 1, 1, {2}), Matrix::from_ints(f, 1, 1, {1}));
    CHECK(x == Matrix::from_ints(f, 1, 1, {3}));
    std::mt19937_64 rng(3);
    Matrix b = Matrix::random(f, 4, 2, rng);
    CHECK(mat_solve(Matrix::identity(f, 4), b) == b);
    CHECK_THROWS_AS(mat_solve(Matrix::from_ints(f, 2, 1, {1, 1}), Matrix::from_ints(f, 2, 1, {0, 1})),
                    NoSolution);
}

TEST_CASE("mat_solve multiply-back")
{
    std::mt19937_64 rng(5);
    const Field& f = Field::get(5, 2);
    for (int t = 0; t < 30; ++t) {
        Matrix a = Matrix::random(f, 4, 3, rng);
        Matrix b = a * Matrix::random(f, 3, 2, rng);
        auto x = mat_try_solve(a, b);
        REQUIRE(x);
        CHECK(a * *x == b);
    }
}

TEST_CASE("mat_nullspace examples and properties")
{
    const Field& f5 = Field::get(5);
    CHECK(mat_nullspace(Matrix(f5, 1, 1)).cols() == 1);
    CHECK(mat_nullspace(Matrix::identity(f5, 4)).cols() == 0);
    const Field& f3 = Field::get(3);
    Matrix n = mat_nullspace(Matrix::from_ints(f3, 1, 2, {1, 2}));
    REQUIRE(n.cols() == 1);
    CHECK(n == Matrix::from_ints(f3, 2, 1, {1, 1}));

    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        Matrix a = Matrix::random(f3, 3, 6, rng);
        Matrix ns = mat_nullspace(a);
        CHECK(ns.cols() == 6 - mat_rank(a));
        CHECK((a * ns).is_zero());
        CHECK(mat_rank(ns) == ns.cols());
    }
}

TEST_CASE("mat_kron examples")
{
    const Field& f = Field::get(5);
    CHECK(mat_kron(Matrix::identity(f, 2), Matrix::identity(f, 3)) == Matrix::identity(f, 6));
    std::mt19937_64 rng(1);
    Matrix a = Matrix::random(f, 3, 2, rng);
    CHECK(mat_kron(a, Matrix::from_ints(f, 1, 1, {3})) == a.scaled(3));
    for (int t = 0; t < 20; ++t) {
        Matrix x = Matrix::random(f, 2, 2, rng), y = Matrix::random(f, 2, 2, rng);
        if (t % 2)
            y.at(1, 0) = y(0, 0), y.at(1, 1) = y(0, 1);
        CHECK(brute_rank(mat_kron(x, y)) == brute_rank(x) * brute_rank(y));
    }
}

TEST_CASE("inverse and echelon tracking")
{
    std::mt19937_64 rng(2);
    const Field& f = Field::get(3, 2);
    for (int t = 0; t < 20; ++t) {
        Matrix a = Matrix::random(f, 4, 4, rng);
        auto inv = mat_inverse(a);
        CHECK(bool(inv) == (mat_rank(a) == 4));
        if (inv)
            CHECK((a * *inv).is_identity());
    }
    Echelon e(f, 3, true);
    Vec u = {1, 2, 0}, v = {0, 1, 1};
    CHECK(e.insert(u));
    CHECK(e.insert(v));
    Vec w(3);
    for (int i = 0; i < 3; ++i)
        w[i] = f.add(f.mul(4, u[i]), f.mul(7, v[i]));
    auto c = e.express(w);
    REQUIRE(c);
    CHECK((*c)[0] == 4);
    CHECK((*c)[1] == 7);
    CHECK_FALSE(e.insert(w));
}

TEST_CASE("polynomials")
{
    const Field& f = Field::get(5);
    // (x-1)^2 (x-2) (x^2+2)
    Poly a = poly::mul(f, poly::mul(f, Poly{4, 1}, Poly{4, 1}), poly::mul(f, Poly{3, 1}, Poly{2, 0, 1}));
    auto fac = poly::coprime_factors(f, a);
    Poly prod = {1};
    for (auto& x : fac)
        for (unsigned i = 0; i < x.multiplicity; ++i)
            prod = poly::mul(f, prod, x.base);
    CHECK(prod == a);
    CHECK(fac.size() == 3);
    // p-th powers: (x^5+1)^2 = (x+1)^10
    Poly b = poly::mul(f, Poly{1, 0, 0, 0, 0, 1}, Poly{1, 0, 0, 0, 0, 1});
    auto fb = poly::coprime_factors(f, b);
    REQUIRE(fb.size() == 1);
    CHECK(fb[0].multiplicity == 10);
    CHECK(fb[0].base == Poly{1, 1});

    std::mt19937_64 rng(4);
    Matrix m = Matrix::random(f, 5, 5, rng);
    Poly mp = min_poly(m);
    CHECK(poly::eval(mp, m).is_zero());
}
