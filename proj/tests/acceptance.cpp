// One pass/fail line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "tau/catalog.hpp"

using namespace tau;

namespace {

constexpr double a5_limit_seconds = 120.0;
constexpr double s5_limit_seconds = 1800.0;
constexpr long a5_expected = 6;
constexpr long s5_expected = 70;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

bool passed(const Report& r, const std::string& name)
{
    bool found = false;
    for (auto& c : r.checks)
        if (c.name == name) {
            if (!c.passed)
                return false;
            found = true;
        }
    return found;
}

bool all_passed(const Report& r, const std::vector<std::string>& names, std::string& missing)
{
    for (auto& n : names)
        if (!passed(r, n)) {
            missing += (missing.empty() ? "" : ",") + n;
        }
    return missing.empty();
}

bool has_event(const Report& r, const std::string& kind)
{
    for (auto& e : r.events)
        if (e.rfind(kind, 0) == 0)
            return true;
    return false;
}

const CatalogEntry& entry(const std::string& name)
{
    const CatalogEntry* e = find_entry(name);
    if (!e)
        throw std::logic_error("missing catalog entry " + name);
    return *e;
}

std::string fmt(double s)
{
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s;
    return os.str();
}

struct Outcome {
    bool ok;
    std::string detail;
};

Outcome criterion1()
{
    auto t = Clock::now();
    EnumerateResult r = run_enumerate(entry("A5-S5"), false, {});
    double s = seconds_since(t);
    long n = long(r.quiver.vertices.size());
    return {n == a5_expected && r.quiver.complete && s < a5_limit_seconds,
            "B0(F5 A5): " + std::to_string(n) + " pairs in " + fmt(s) + " s (limit " + fmt(a5_limit_seconds) + " s)"};
}

Outcome criterion2()
{
    auto t = Clock::now();
    EnumerateResult r = run_enumerate(entry("A5-S5"), true, {});
    double s = seconds_since(t);
    long n = long(r.quiver.vertices.size());
    return {n == s5_expected && r.quiver.complete && s < s5_limit_seconds,
            "B0(F5 S5): " + std::to_string(n) + " pairs in " + fmt(s) + " s (limit " + fmt(s5_limit_seconds) + " s)"};
}

Outcome criterion3()
{
    Report r = run_verify(entry("A5-S5"), {});
    std::string missing;
    bool ok = all_passed(r,
                         {"covering", "inertia_whole", "bricks_stable", "tau_rigid_stable", "stability_agrees",
                          "quotient_kind", "h2_flag", "quotient_algebra_basic", "induced_pairs_valid",
                          "induced_pairs_distinct", "square_semibrick", "square_g_vector", "square_two_smc"},
                         missing);
    ok = ok && r.ok() && r.info["sub_vertices"] == "6";
    return {ok, "verify A5-S5: " + std::to_string(r.checks.size()) + " checks, " +
                    (r.ok() ? "all pass" : "failing " + missing) + ", induced pairs from " + r.info["sub_vertices"] +
                    " vertices"};
}

Outcome criterion4()
{
    Report r = run_verify(entry("S3-S3xC3"), {});
    std::string missing;
    bool ok = all_passed(r, {"hasse_vertex_map", "hasse_injective", "hasse_arrows", "hasse_labels_extend",
                             "hasse_isomorphism"},
                         missing);
    ok = ok && r.ok() && r.info["sub_vertices"] == "6" && r.info["super_vertices"] == "6";
    return {ok, "S3 < S3xC3 at p = 3: labeled Hasse isomorphism " + r.info["sub_vertices"] + " <-> " +
                    r.info["super_vertices"] + (missing.empty() ? "" : ", failing " + missing)};
}

Outcome criterion5()
{
    auto inst = build_instance(entry("A4-S4"));
    const NormalPair& np = *inst->np;
    const BlockIdem& b0 = inst->blocks[0];
    auto cov = covering_blocks(inst->big_blocks(), b0, np);
    std::size_t covering_simples = 0;
    for (auto i : cov)
        covering_simples += inst->big_blocks()[i].algebra->structure().count();
    const std::size_t qs = quotient_simple_count(np), bs = b0.algebra->structure().count();

    AMod triv = trivial_module(*inst->small);
    auto ext = extending_modules(triv, np);
    bool distinct = true;
    for (std::size_t i = 0; i < ext.size(); ++i)
        for (std::size_t j = i + 1; j < ext.size(); ++j)
            distinct &= !is_iso(ext[i], ext[j]);
    bool restrict_ok = true;
    for (auto& e : ext)
        restrict_ok &= is_group_module(*inst->big, e) && is_iso(restrict_module(e, np), triv);
    bool ok = cov.size() == 1 && covering_simples == 2 && qs == 2 && bs == 1 && ext.size() == 2 && distinct &&
              restrict_ok;
    return {ok, "A4 < S4 at p = 3: covering block has " + std::to_string(covering_simples) + " simples = " +
                    std::to_string(qs) + " x " + std::to_string(bs) + "; trivial module has " +
                    std::to_string(ext.size()) + (distinct ? " distinct" : " coinciding") + " extensions" +
                    (restrict_ok ? ", each restricting to trivial" : ", restriction mismatch")};
}

Outcome criterion6()
{
    std::string detail;
    bool ok = true;
    for (unsigned p : {2u, 3u, 5u}) {
        Perm c(p);
        for (unsigned i = 0; i < p; ++i)
            c[i] = int((i + 1) % p);
        GroupAlgebra kc(PermGroup({c}), Field::get(p), "C" + std::to_string(p));
        auto oracle_result = oracle::brute_force_quotients(*kc.algebra);
        auto q = enumerate_hasse(*kc.algebra);
        bool m = oracle::matches(oracle_result, q);
        ok &= m;
        detail += (detail.empty() ? "" : ", ") + std::string("p=") + std::to_string(p) + (m ? " match" : " MISMATCH") +
                  " (" + std::to_string(q.vertices.size()) + " vertices)";
    }
    return {ok, "brute-force quotient oracle vs BFS on F_p C_p: " + detail};
}

Outcome criterion7()
{
    const std::vector<std::string> props = {"mackey",           "frobenius_reciprocity", "tau_commutes_with_ind",
                                            "ind_summand_count", "pair_sizes",           "label_iff_mutation"};
    bool ok = true;
    std::string detail;
    for (auto& e : catalog()) {
        Report r = run_verify(e, {});
        std::string missing;
        bool good = all_passed(r, props, missing);
        ok &= good;
        detail += (detail.empty() ? "" : ", ") + e.name + (good ? " ok" : " failing " + missing);
    }
    return {ok, "property suites: " + detail};
}

Outcome criterion8()
{
    Report split = run_verify(entry("C3-C6"), {});
    RunOptions opt;
    opt.block = parse_block("index 1");
    Report small = run_verify(entry("C2-C4"), opt);
    bool ns = has_event(split, "FieldNotSplitting") && split.to_json().find("FieldNotSplitting") != std::string::npos;
    bool ts = has_event(small, "FieldTooSmall") && small.to_json().find("FieldTooSmall") != std::string::npos;
    bool ok = ns && ts && split.ok() && small.ok();
    return {ok, std::string("FieldNotSplitting reported for C3-C6: ") + (ns ? "yes" : "no") +
                    ", FieldTooSmall reported for C2-C4 block 1: " + (ts ? "yes" : "no") +
                    ", reruns over the larger field " + (split.ok() && small.ok() ? "pass" : "fail")};
}

}  // namespace

int main()
{
    const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                            criterion5, criterion6, criterion7, criterion8};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.ok;
        std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << o.detail << std::endl;
    }
    return failures ? 1 : 0;
}
