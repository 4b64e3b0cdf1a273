#include "doctest.h"
#include "group_helpers.hpp"

using namespace tau;
using testutil::Perm;

namespace {

const Perm c3{1, 2, 0}, t12{1, 0, 2};

std::unique_ptr<Algebra> s3(const Field& f) { return testutil::group_algebra(f, {c3, t12}); }

std::unique_ptr<Algebra> cyclic(const Field& f, int n)
{
    Perm c(n);
    for (int i = 0; i < n; ++i)
        c[i] = (i + 1) % n;
    return testutil::group_algebra(f, {c});
}

// Span of g(x - 1) for g in G and x in a normal p-subgroup generated by `xs`;
// equals J(kG) when that subgroup is a Sylow p-subgroup.
Matrix augmentation_ideal(const Algebra& a, const std::vector<Vec>& xs)
{
    const Field& f = a.field();
    std::vector<Matrix> cols;
    for (std::size_t g = 0; g < a.dim(); ++g)
        for (auto& x : xs) {
            Vec v = a.mul(a.basis_vector(g), x);
            v[g] = f.sub(v[g], 1);
            cols.push_back(Matrix::column(f, v));
        }
    return hstack(cols, f, a.dim());
}

bool same_span(const Matrix& a, const Matrix& b)
{
    std::size_t ra = mat_rank(a), rb = mat_rank(b);
    return ra == rb && mat_rank(hstack({a, b}, a.field(), a.rows())) == ra;
}

// Exhaustive search for an invertible element of Hom(x, y).
bool brute_iso(const AMod& x, const AMod& y)
{
    if (x.dim() != y.dim())
        return false;
    auto h = hom_basis(x, y);
    const Field& f = x.field();
    std::size_t total = 1;
    for (std::size_t i = 0; i < h.size(); ++i)
        total *= f.q();
    for (std::size_t c = 0; c < total; ++c) {
        Matrix s(f, x.dim(), x.dim());
        std::size_t r = c;
        for (auto& b : h) {
            s.axpy(Scalar(r % f.q()), b);
            r /= f.q();
        }
        if (mat_rank(s) == x.dim())
            return true;
    }
    return false;
}

}  // namespace

TEST_CASE("group algebra construction is associative with symmetric form")
{
    auto a = s3(Field::get(3));
    CHECK(a->dim() == 6);
    CHECK(a->check_associative());
    CHECK(a->is_symmetric());
    CHECK(&a->opposite().opposite() == a.get());
    CHECK(a->opposite().check_associative());
}

TEST_CASE("hom_basis agrees with the Kronecker system")
{
    const Field& f = Field::get(3);
    auto a = s3(f);
    AMod reg = AMod::regular(*a);
    AMod triv = testutil::scalar_module(*a, {1, 1});
    AMod sign = testutil::scalar_module(*a, {1, -1});
    for (auto* x : {&reg, &triv, &sign})
        for (auto* y : {&reg, &triv, &sign}) {
            auto h = hom_basis(*x, *y);
            CHECK(h.size() == testutil::brute_hom_dim(*x, *y));
            for (auto& m : h)
                CHECK(is_hom(*x, *y, m));
        }
    CHECK(reg.check_relations());
    CHECK(sign.check_relations());
}

TEST_CASE("radical dimensions")
{
    SUBCASE("F5 C5")
    {
        auto a = cyclic(Field::get(5), 5);
        Matrix j = algebra_radical(*a);
        CHECK(j.cols() == 4);
        CHECK(same_span(j, augmentation_ideal(*a, a->generators())));
    }
    SUBCASE("F3 C2 is semisimple") { CHECK(algebra_radical(*cyclic(Field::get(3), 2)).cols() == 0); }
    SUBCASE("F3 S3")
    {
        auto a = s3(Field::get(3));
        Matrix j = algebra_radical(*a);
        CHECK(j.cols() == 4);
        CHECK(same_span(j, augmentation_ideal(*a, {a->generators()[0]})));
    }
    SUBCASE("F2 C4 and F3 C9 need higher trace forms")
    {
        CHECK(algebra_radical(*cyclic(Field::get(2), 4)).cols() == 3);
        CHECK(algebra_radical(*cyclic(Field::get(3), 9)).cols() == 8);
    }
    SUBCASE("extension field F25 C5")
    {
        const Field& f = Field::get(5, 2);
        auto a = cyclic(f, 5);
        Matrix j = algebra_radical(*a);
        CHECK(j.cols() == 4);
        CHECK(same_span(j, augmentation_ideal(*a, a->generators())));
    }
    SUBCASE("F4 S3 at p=2")
    {
        auto a = s3(Field::get(2, 2));
        // Semisimple quotient is F4 x M_2(F4), of dimension 5.
        CHECK(algebra_radical(*a).cols() == 1);
    }
}

TEST_CASE("structure of F3 S3")
{
    const Field& f = Field::get(3);
    auto a = s3(f);
    const Structure& st = a->structure();
    REQUIRE(st.count() == 2);
    AMod triv = testutil::scalar_module(*a, {1, 1});
    AMod sign = testutil::scalar_module(*a, {1, -1});
    std::size_t it = 0, is = 0;
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(st.simples[i].dim() == 1);
        CHECK(st.pims[i].dim() == 3);
        CHECK(st.pim_radical[i].cols() == 2);
        if (is_iso(st.simples[i], triv))
            it = i;
        else
            is = i;
    }
    REQUIRE(it != is);
    CHECK(hom_dim(st.pims[it], sign) == 0);
    CHECK(hom_dim(st.pims[it], triv) == 1);
    CHECK(radical_mod(st.pims[it]).source.dim() == 2);
    CHECK(ext1_dim(triv, sign) == 1);
    CHECK(ext1_dim(triv, triv) == 0);
    CHECK(is_iso(tau::tau(triv), sign));
    CHECK(is_iso(tau_inv(sign), triv));
    CHECK(is_projective(st.pims[0]));
    CHECK_FALSE(is_projective(triv));
    CHECK(composition_vector(AMod::regular(*a)) == std::vector<std::size_t>{3, 3});
    CHECK(pim_index(st.pims[1]) == 1);
}

TEST_CASE("decomposition and isomorphism")
{
    const Field& f = Field::get(3);
    auto a = s3(f);
    AMod reg = AMod::regular(*a);
    auto d = decompose(reg);
    CHECK(d.size() == 2);
    for (auto& [m, k] : d)
        CHECK(k == 1);
    AMod two = direct_sum(reg, reg);
    auto parts = decompose_summands(two, 3);
    CHECK(parts.size() == 4);
    for (auto& p : parts) {
        CHECK(is_hom(p.module, two, p.inclusion));
        CHECK(is_hom(two, p.module, p.projection));
        CHECK((p.projection * p.inclusion).is_identity());
    }
    CHECK(decompose(two).size() == 2);

    AMod triv = testutil::scalar_module(*a, {1, 1});
    AMod sign = testutil::scalar_module(*a, {1, -1});
    AMod om = syzygy(triv);
    CHECK(om.dim() == 2);
    for (auto* x : {&triv, &sign, &om})
        for (auto* y : {&triv, &sign, &om})
            CHECK(is_iso(*x, *y) == brute_iso(*x, *y));
    CHECK(is_iso(direct_sum(triv, sign), direct_sum(sign, triv)));
    CHECK_FALSE(is_iso(direct_sum(triv, triv), direct_sum(sign, triv)));

    auto c5 = cyclic(Field::get(5), 5);
    CHECK(decompose(AMod::regular(*c5)).size() == 1);
    auto c2 = cyclic(f, 2);
    CHECK(decompose(AMod::regular(*c2)).size() == 2);
}

TEST_CASE("radical homs of a local module")
{
    auto c5 = cyclic(Field::get(5), 5);
    AMod reg = AMod::regular(*c5);
    auto r = radical_endos(reg);
    CHECK(r.size() == 4);
    for (auto& m : r)
        CHECK(mat_rank(m) < 5);
}

TEST_CASE("non-splitting field is reported")
{
    // F2 C3 has a two-dimensional simple with End = F4.
    auto a = cyclic(Field::get(2), 3);
    CHECK_THROWS_AS(a->structure(), FieldNotSplitting);
    try {
        decompose(AMod::regular(*a));
        FAIL("expected FieldNotSplitting");
    } catch (const FieldNotSplitting& e) {
        CHECK(e.degree == 2);
    }
    auto b = cyclic(Field::get(2, 2), 3);
    CHECK(b->structure().count() == 3);
}

TEST_CASE("cosyzygy inverts syzygy on non-projective indecomposables")
{
    auto a = s3(Field::get(3));
    AMod triv = testutil::scalar_module(*a, {1, 1});
    CHECK(is_iso(cosyzygy(syzygy(triv)), triv));
    CHECK(is_iso(syzygy(cosyzygy(triv)), triv));
    auto pr = minimal_presentation(triv);
    CHECK(pr.p0.dim() == 3);
    CHECK(pr.p1.dim() == 3);
    CHECK(is_hom(pr.p1, pr.p0, pr.f1));
    CHECK(mat_rank(pr.f1) == 2);
}
