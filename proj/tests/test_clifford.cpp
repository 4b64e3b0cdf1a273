#include "doctest.h"
#include "tau/clifford.hpp"

using namespace tau;

namespace {

struct Setup {
    std::unique_ptr<GroupAlgebra> big, small;
    std::unique_ptr<NormalPair> np;
    std::vector<BlockIdem> blocks, tilde_blocks;
};

Setup make(const Field& f, std::size_t degree, const std::vector<std::string>& gens,
           const std::vector<std::string>& words, bool with_blocks = true)
{
    std::vector<Perm> g;
    for (auto& c : gens)
        g.push_back(parse_cycles(c, degree));
    Setup s;
    s.big = std::make_unique<GroupAlgebra>(PermGroup(g), f, "big");
    std::vector<Perm> h;
    for (auto& w : words)
        h.push_back(s.big->group.eval_word(w));
    s.small = std::make_unique<GroupAlgebra>(PermGroup(h), f, "small");
    s.np = std::make_unique<NormalPair>(*s.small, *s.big, words);
    if (with_blocks) {
        s.blocks = central_primitive_idempotents(*s.small);
        s.tilde_blocks = central_primitive_idempotents(*s.big);
    }
    return s;
}

CoveringPair principal_pair(const Setup& s, QuotientKind kind)
{
    auto cov = covering_blocks(s.tilde_blocks, s.blocks[0], *s.np);
    REQUIRE(!cov.empty());
    return {s.np.get(), &s.blocks[0], &s.tilde_blocks[cov[0]], {kind, true, true}};
}

// One-dimensional modules of G~ restricting to u, by trying every scalar on
// every generator.
std::size_t brute_one_dim_extensions(const AMod& u, const NormalPair& np)
{
    const Field& f = *np.g->field;
    const std::size_t ng = np.gt->group.generators().size();
    std::vector<unsigned> digits(ng, 1);
    std::size_t count = 0;
    while (true) {
        std::vector<Matrix> g;
        for (auto d : digits) {
            g.emplace_back(f, 1, 1);
            g.back().at(0, 0) = Scalar(d);
        }
        AMod v = np.gt->module(g);
        if (is_group_module(*np.gt, v) && restrict_module(v, np).gens() == u.gens())
            ++count;
        std::size_t s = 0;
        while (s < ng && ++digits[s] == f.q())
            digits[s++] = 1;
        if (s == ng)
            break;
    }
    return count;
}

}  // namespace

TEST_CASE("linear characters of the quotient")
{
    auto c2p3 = make(Field::get(3), 4, {"(1 2 3)(4)", "(1 2)"}, {"a"}, false);
    CHECK(extension_count_e(*c2p3.np) == 2);
    auto c3p3 = make(Field::get(3), 6, {"(1 2 3)", "(4 5 6)"}, {"a"}, false);
    CHECK(extension_count_e(*c3p3.np) == 1);
    auto c2p5 = make(Field::get(5), 5, {"(1 2 3 4 5)", "(1 2 3)", "(1 2)"}, {"a", "b"}, false);
    CHECK(extension_count_e(*c2p5.np) == 2);
    CHECK(compute_quotient_kind(*c2p3.np) == QuotientKind::Cyclic);
    CHECK(compute_quotient_kind(*c3p3.np) == QuotientKind::PGroup);
    CHECK(quotient_simple_count(*c3p3.np) == 1);
    CHECK(quotient_simple_count(*c2p5.np) == 2);
    CHECK(quotient_algebra_basic(*c2p5.np));
    auto s3 = make(Field::get(5), 3, {"(1 2 3)", "(1 2)"}, {"aaa"}, false);
    CHECK(compute_quotient_kind(*s3.np) == QuotientKind::Other);
    auto d10 = make(Field::get(5), 5, {"(1 2 3 4 5)", "(2 5)(3 4)"}, {"aaaaa"}, false);
    CHECK(compute_quotient_kind(*d10.np) == QuotientKind::Dihedral2p);
}

TEST_CASE("A4 in S4 at p = 3")
{
    auto s = make(Field::get(3), 4, {"(1 2 3)", "(1 2)(3 4)", "(1 2)"}, {"a", "b"});
    CHECK(s.small->group.order() == 12);
    const BlockIdem& b0 = s.blocks[0];
    CHECK(b0.algebra->structure().count() == 1);
    auto cov = covering_blocks(s.tilde_blocks, b0, *s.np);
    REQUIRE(cov.size() == 1);
    CHECK(s.tilde_blocks[cov[0]].principal);
    CHECK(s.tilde_blocks[cov[0]].algebra->structure().count() == 2);
    CHECK(quotient_simple_count(*s.np) == 2);
    CHECK(counting_check(s.tilde_blocks, b0, *s.np));

    AMod triv = trivial_module(*s.small);
    REQUIRE(is_stable(triv, *s.np));
    auto ext = extending_modules(triv, *s.np);
    REQUIRE(ext.size() == 2);
    CHECK(brute_one_dim_extensions(triv, *s.np) == 2);
    CHECK_FALSE(is_iso(ext[0], ext[1]));
    for (auto& e : ext) {
        CHECK(is_group_module(*s.big, e));
        CHECK(is_iso(restrict_module(e, *s.np), triv));
    }
}

TEST_CASE("extension of a three-dimensional brick of A4 to S4")
{
    // The standard module of A4 over F3 is a stable simple brick.
    auto s = make(Field::get(3), 4, {"(1 2 3)", "(1 2)(3 4)", "(1 2)"}, {"a", "b"});
    REQUIRE(s.blocks.size() == 2);
    const BlockIdem& b1 = s.blocks[1];
    AMod simple = inflate_block_module(*s.small, b1.algebra->structure().simples[0]);
    CHECK(simple.dim() == 3);
    REQUIRE(is_stable(simple, *s.np));
    auto ext = extending_modules(simple, *s.np);
    REQUIRE(ext.size() == 2);
    for (auto& e : ext) {
        CHECK(is_group_module(*s.big, e));
        CHECK(is_iso(restrict_module(e, *s.np), simple));
    }
    CHECK_FALSE(is_iso(ext[0], ext[1]));
    AMod perm = induce_module(trivial_module(*s.small), *s.np);
    CHECK(is_iso(induce_module(simple, *s.np), tensor_modules(ext[0], perm)));
}

TEST_CASE("field too small and unsupported quotients")
{
    // x^2 acts by -1 on the sign module of C2 inside C4; over F3 this needs a
    // square root of -1.
    auto s = make(Field::get(3), 4, {"(1 2 3 4)"}, {"aa"}, false);
    AMod sign = s.small->module({Matrix::from_ints(Field::get(3), 1, 1, {-1})});
    CHECK(brute_one_dim_extensions(sign, *s.np) == 0);
    try {
        extending_modules(sign, *s.np);
        FAIL("expected FieldTooSmall");
    } catch (const FieldTooSmall& e) {
        CHECK(e.degree == 2);
    }
    auto s9 = make(Field::get(3, 2), 4, {"(1 2 3 4)"}, {"aa"}, false);
    AMod sign9 = s9.small->module({Matrix::from_ints(Field::get(3, 2), 1, 1, {-1})});
    auto ext = extending_modules(sign9, *s9.np);
    CHECK(ext.size() == 2);
    CHECK(brute_one_dim_extensions(sign9, *s9.np) == 2);

    auto c222 = make(Field::get(3), 6, {"(1 2)", "(3 4)", "(5 6)"}, {"aa"}, false);
    CHECK_THROWS_AS(extending_modules(trivial_module(*c222.small), *c222.np), UnsupportedQuotient);
}

TEST_CASE("S3 in S3 x C3 at p = 3 embeds the Hasse quiver")
{
    auto s = make(Field::get(3), 6, {"(1 2 3)", "(1 2)", "(4 5 6)"}, {"a", "b"});
    CoveringPair pair = principal_pair(s, QuotientKind::PGroup);
    auto hasse = enumerate_hasse(*pair.b->algebra);
    auto tilde = enumerate_hasse(*pair.btilde->algebra);
    CHECK(hasse.vertices.size() == 6);
    CHECK(tilde.vertices.size() == 6);
    Report h = check_hypotheses(pair, hasse);
    CHECK_MESSAGE(h.ok(), h.to_json());
    Report e = verify_hasse_embedding(pair, hasse, tilde);
    CHECK_MESSAGE(e.ok(), e.to_json());
    Report q = verify_squares(pair, hasse);
    CHECK_MESSAGE(q.ok(), q.to_json());
    CHECK(counting_check(s.tilde_blocks, *pair.b, *s.np));
}

TEST_CASE("A5 in S5 at p = 5 squares commute")
{
    auto s = make(Field::get(5), 5, {"(1 2 3 4 5)", "(1 2 3)", "(1 2)"}, {"a", "b"});
    CoveringPair pair = principal_pair(s, QuotientKind::Cyclic);
    auto hasse = enumerate_hasse(*pair.b->algebra);
    REQUIRE(hasse.vertices.size() == 6);
    Report h = check_hypotheses(pair, hasse);
    CHECK_MESSAGE(h.ok(), h.to_json());
    Report q = verify_squares(pair, hasse);
    CHECK_MESSAGE(q.ok(), q.to_json());

    // The 3-dimensional simple of B0 has two extensions to S5.
    const Structure& st = pair.b->algebra->structure();
    for (auto& simple : st.simples) {
        AMod u = inflate_block_module(*s.small, simple);
        CHECK(is_stable(u, *s.np));
        auto ext = extending_modules(u, *s.np);
        REQUIRE(ext.size() == 2);
        CHECK_FALSE(is_iso(ext[0], ext[1]));
        for (auto& e : ext)
            CHECK(is_iso(restrict_module(e, *s.np), u));
    }
    // Extensions of the simples of B0 are the simples of B0~.
    Semibrick simples = ind_semibrick(st.simples, pair);
    CHECK(same_semibrick(simples, pair.btilde->algebra->structure().simples));
    CHECK(ind_semibrick({}, pair).empty());
    CHECK(same_pair(ind_stau(top_pair(*pair.b->algebra), pair), top_pair(*pair.btilde->algebra)));
    CHECK(same_pair(ind_stau(bottom_pair(*pair.b->algebra), pair), bottom_pair(*pair.btilde->algebra)));

    auto d = induced_pim_matrix(pair);
    REQUIRE(d.size() == 4);
    for (auto& row : d)
        for (auto x : row)
            CHECK(x >= 0);
    CHECK(counting_check(s.tilde_blocks, *pair.b, *s.np));

    // A block that does not cover B0 must be rejected.
    CoveringPair wrong = pair;
    for (auto& bt : s.tilde_blocks)
        if (!covers(bt, *pair.b, *s.np))
            wrong.btilde = &bt;
    REQUIRE(wrong.btilde != pair.btilde);
    CHECK_THROWS_AS(ind_stau(hasse.vertices[0], wrong), HypothesisFailed);
    Report bad = verify_squares(wrong, hasse);
    CHECK_FALSE(bad.ok());
}

TEST_CASE("property suite on C3 in C3 x C3")
{
    auto s = make(Field::get(3), 6, {"(1 2 3)", "(4 5 6)"}, {"a"});
    CoveringPair pair = principal_pair(s, QuotientKind::PGroup);
    auto hasse = enumerate_hasse(*pair.b->algebra);
    auto tilde = enumerate_hasse(*pair.btilde->algebra);
    CHECK(hasse.vertices.size() == 2);
    CHECK(tilde.vertices.size() == 2);
    Report r = property_suite(pair, hasse, tilde, 0, 4);
    CHECK_MESSAGE(r.ok(), r.to_json());
    Report e = verify_hasse_embedding(pair, hasse, tilde);
    CHECK_MESSAGE(e.ok(), e.to_json());
}
