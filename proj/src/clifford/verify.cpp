#include <algorithm>
#include <random>
#include <sstream>

#include "json.hpp"
#include "tau/clifford.hpp"

namespace tau {

using nlohmann::json;

void Report::add(std::string name, bool passed, std::string detail)
{
    checks.push_back({std::move(name), passed, std::move(detail)});
}

void Report::merge(const Report& other)
{
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    events.insert(events.end(), other.events.begin(), other.events.end());
    info.insert(other.info.begin(), other.info.end());
}

bool Report::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> Report::failures() const
{
    std::vector<std::string> out;
    for (auto& c : checks)
        if (!c.passed)
            out.push_back(c.name);
    return out;
}

std::string Report::to_json() const
{
    json j;
    j["ok"] = ok();
    j["checks"] = json::array();
    for (auto& c : checks)
        j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["events"] = events;
    j["info"] = info;
    return j.dump(2);
}

namespace {

// Distinct indecomposable parts of M over all vertices.
std::vector<AMod> tau_rigid_parts(const HasseQuiver& q)
{
    std::vector<AMod> out;
    for (auto& v : q.vertices)
        for (auto& m : v.m_parts) {
            bool seen = false;
            for (auto& x : out)
                if (x.dim() == m.dim() && is_iso_indecomposable(x, m)) {
                    seen = true;
                    break;
                }
            if (!seen)
                out.push_back(m);
        }
    return out;
}

std::vector<AMod> distinct_labels(const HasseQuiver& q)
{
    std::vector<AMod> out;
    for (auto& a : q.arrows) {
        bool seen = false;
        for (auto& x : out)
            if (x.dim() == a.label.dim() && is_iso_indecomposable(x, a.label)) {
                seen = true;
                break;
            }
        if (!seen)
            out.push_back(a.label);
    }
    return out;
}

std::string vertex_list(const std::vector<std::size_t>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os.str();
}

void add_list_check(Report& r, const std::string& name, const std::vector<std::size_t>& bad,
                    const std::string& what)
{
    r.add(name, bad.empty(), bad.empty() ? "" : what + " " + vertex_list(bad));
}

}  // namespace

Report check_hypotheses(const CoveringPair& pair, const HasseQuiver& hasse)
{
    const NormalPair& np = *pair.np;
    Report r;
    r.add("covering", covers(*pair.btilde, *pair.b, np));
    r.add("inertia_whole", inertia_is_whole(pair));

    auto labels = distinct_labels(hasse);
    std::size_t unstable_labels = 0;
    for (auto& l : labels)
        unstable_labels += !is_stable(inflate_block_module(*np.g, l), np);
    auto parts = tau_rigid_parts(hasse);
    std::size_t unstable_parts = 0;
    for (auto& m : parts)
        unstable_parts += !is_stable(inflate_block_module(*np.g, m), np);
    r.add("bricks_stable", unstable_labels == 0,
          std::to_string(labels.size() - unstable_labels) + "/" + std::to_string(labels.size()) + " stable");
    r.add("tau_rigid_stable", unstable_parts == 0,
          std::to_string(parts.size() - unstable_parts) + "/" + std::to_string(parts.size()) + " stable");
    r.add("stability_agrees", (unstable_labels == 0) == (unstable_parts == 0));

    QuotientKind computed = compute_quotient_kind(np);
    r.add("quotient_kind", kind_compatible(pair.meta.kind, np),
          "declared " + to_string(pair.meta.kind) + ", computed " + to_string(computed));
    bool h2_expected = pair.meta.kind != QuotientKind::Other;
    r.add("h2_flag", !h2_expected || pair.meta.h2_trivial, "declared " + std::string(pair.meta.h2_trivial ? "trivial" : "unknown"));
    bool basic = quotient_algebra_basic(np);
    r.add("quotient_algebra_basic", basic && pair.meta.basic_quotient_algebra == basic,
          std::string("computed ") + (basic ? "basic" : "not basic"));
    return r;
}

Report verify_squares(const CoveringPair& pair, const HasseQuiver& hasse)
{
    Report r;
    std::vector<std::size_t> invalid, bad_a, bad_b, bad_c, bad_order;
    std::vector<std::optional<STiltPair>> ind(hasse.vertices.size());
    auto dmat = induced_pim_matrix(pair);
    for (std::size_t v = 0; v < hasse.vertices.size(); ++v) {
        const STiltPair& x = hasse.vertices[v];
        try {
            ind[v] = ind_stau(x, pair);
        } catch (const HypothesisFailed&) {
            invalid.push_back(v);
            continue;
        }
        const STiltPair& y = *ind[v];
        if (!same_semibrick(left_semibrick(y), ind_semibrick(left_semibrick(x), pair)))
            bad_a.push_back(v);

        auto g = g_vector(two_term_silting(x));
        std::vector<long> expect(dmat.size(), 0);
        for (std::size_t j = 0; j < dmat.size(); ++j)
            for (std::size_t i = 0; i < g.size(); ++i)
                expect[j] += dmat[j][i] * g[i];
        if (g_vector(two_term_silting(y)) != expect)
            bad_b.push_back(v);

        TwoSMC src = two_smc(x), dst = two_smc(y);
        if (!same_semibrick(dst.degree0, ind_semibrick(src.degree0, pair)) ||
            !same_semibrick(dst.degree1, ind_semibrick(src.degree1, pair)) || !validate_two_smc(dst))
            bad_c.push_back(v);
    }
    add_list_check(r, "induced_pairs_valid", invalid, "failed at vertices");

    std::vector<std::size_t> dup;
    for (std::size_t i = 0; i < ind.size(); ++i)
        for (std::size_t j = i + 1; j < ind.size(); ++j)
            if (ind[i] && ind[j] && same_pair(*ind[i], *ind[j]))
                dup.push_back(i);
    add_list_check(r, "induced_pairs_distinct", dup, "coincides with a later vertex at");

    for (auto& a : hasse.arrows)
        if (ind[a.from] && ind[a.to] && !fac_leq(*ind[a.to], *ind[a.from]))
            bad_order.push_back(a.from);
    add_list_check(r, "order_preserved", bad_order, "arrow sources");
    add_list_check(r, "square_semibrick", bad_a, "vertices");
    add_list_check(r, "square_g_vector", bad_b, "vertices");
    add_list_check(r, "square_two_smc", bad_c, "vertices");
    return r;
}

Report verify_hasse_embedding(const CoveringPair& pair, const HasseQuiver& hasse, const HasseQuiver& tilde_hasse)
{
    Report r;
    const std::size_t none = std::size_t(-1);
    std::vector<std::size_t> image(hasse.vertices.size(), none);
    std::vector<std::size_t> missing;
    for (std::size_t v = 0; v < hasse.vertices.size(); ++v) {
        STiltPair y;
        try {
            y = ind_stau(hasse.vertices[v], pair);
        } catch (const HypothesisFailed&) {
            missing.push_back(v);
            continue;
        }
        for (std::size_t w = 0; w < tilde_hasse.vertices.size() && image[v] == none; ++w)
            if (same_pair(y, tilde_hasse.vertices[w]))
                image[v] = w;
        if (image[v] == none)
            missing.push_back(v);
    }
    add_list_check(r, "hasse_vertex_map", missing, "no image for vertices");
    std::vector<std::size_t> sorted;
    for (auto i : image)
        if (i != none)
            sorted.push_back(i);
    std::sort(sorted.begin(), sorted.end());
    r.add("hasse_injective", std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

    std::vector<std::size_t> bad_arrow, bad_label;
    for (std::size_t k = 0; k < hasse.arrows.size(); ++k) {
        const HasseArrow& a = hasse.arrows[k];
        if (image[a.from] == none || image[a.to] == none) {
            bad_arrow.push_back(k);
            continue;
        }
        const HasseArrow* hit = nullptr;
        for (auto& t : tilde_hasse.arrows)
            if (t.from == image[a.from] && t.to == image[a.to])
                hit = &t;
        if (!hit) {
            bad_arrow.push_back(k);
            continue;
        }
        Semibrick ext;
        try {
            ext = ind_semibrick({a.label}, pair);
        } catch (const std::exception&) {
        }
        if (ext.size() != 1 || ext[0].dim() != hit->label.dim() || !is_iso_indecomposable(ext[0], hit->label))
            bad_label.push_back(k);
    }
    add_list_check(r, "hasse_arrows", bad_arrow, "arrows");
    add_list_check(r, "hasse_labels_extend", bad_label, "arrows");
    bool iso = hasse.complete && tilde_hasse.complete && missing.empty() &&
               hasse.vertices.size() == tilde_hasse.vertices.size() &&
               hasse.arrows.size() == tilde_hasse.arrows.size() && bad_arrow.empty();
    r.add("hasse_isomorphism", iso,
          std::to_string(hasse.vertices.size()) + " -> " + std::to_string(tilde_hasse.vertices.size()) + " vertices");
    return r;
}

bool counting_check(const std::vector<BlockIdem>& tilde_blocks, const BlockIdem& b, const NormalPair& np)
{
    std::size_t total = 0;
    for (auto i : covering_blocks(tilde_blocks, b, np))
        total += tilde_blocks[i].algebra->structure().count();
    return total == quotient_simple_count(np) * b.algebra->structure().count();
}

Report property_suite(const CoveringPair& pair, const HasseQuiver& hasse, const HasseQuiver& tilde_hasse,
                      std::uint64_t seed, std::size_t random_modules)
{
    const NormalPair& np = *pair.np;
    Report r;
    std::mt19937_64 rng(seed);

    std::size_t mackey_bad = 0, frob_bad = 0;
    for (std::size_t i = 0; i < random_modules; ++i) {
        AMod u = random_module(*np.g->algebra, rng);
        mackey_bad += !mackey_check(u, np);
        AMod v = random_module(*np.gt->algebra, rng);
        AMod iu = induce_module(u, np), rv = restrict_module(v, np);
        frob_bad += hom_dim(iu, v) != hom_dim(u, rv) || hom_dim(v, iu) != hom_dim(rv, u);
    }
    r.add("mackey", mackey_bad == 0, std::to_string(random_modules) + " random modules, seed " + std::to_string(seed));
    r.add("frobenius_reciprocity", frob_bad == 0, std::to_string(random_modules) + " random pairs");

    const std::size_t qcount = quotient_simple_count(np);
    AMod perm_module = induce_module(trivial_module(*np.g), np);
    std::size_t tau_bad = 0, count_bad = 0, prop_bad = 0, tested = 0;
    for (auto& m : tau_rigid_parts(hasse)) {
        AMod u = inflate_block_module(*np.g, m);
        if (!is_stable(u, np))
            continue;
        ++tested;
        AMod iu = induce_module(u, np);
        auto parts = decompose(iu);
        bool mult_one = std::all_of(parts.begin(), parts.end(), [](auto& p) { return p.second == 1; });
        count_bad += parts.size() != qcount || !mult_one;
        if (!is_projective(m)) {
            AMod lhs = tau(ind_block(m, pair)), rhs = ind_block(tau(m), pair);
            tau_bad += !is_iso(lhs, rhs);
            prop_bad += !is_stable(inflate_block_module(*np.g, syzygy(m)), np) ||
                        !is_stable(inflate_block_module(*np.g, cosyzygy(m)), np);
        }
        prop_bad += !is_stable(inflate_block_module(*np.g, projective_cover(m).projective), np);
    }
    r.add("tau_commutes_with_ind", tau_bad == 0, std::to_string(tested) + " stable parts");
    r.add("ind_summand_count", count_bad == 0, "expected " + std::to_string(qcount) + " summands, multiplicity one");
    r.add("stability_propagation", prop_bad == 0);

    std::size_t res_bad = 0, tensor_bad = 0;
    for (auto& l : distinct_labels(hasse)) {
        AMod u = inflate_block_module(*np.g, l);
        if (!is_stable(u, np))
            continue;
        auto exts = extending_modules(u, np);
        for (auto& e : exts)
            res_bad += !is_iso(restrict_module(e, np), u);
        tensor_bad += !is_iso(induce_module(u, np), tensor_modules(exts[0], perm_module));
    }
    r.add("extension_restricts", res_bad == 0);
    r.add("ind_is_extension_tensor_quotient", tensor_bad == 0);

    auto sizes_ok = [](const HasseQuiver& q) {
        for (auto& v : q.vertices)
            if (v.size() != v.algebra().structure().count())
                return false;
        return true;
    };
    r.add("pair_sizes", sizes_ok(hasse) && sizes_ok(tilde_hasse));

    auto labels_ok = [](const HasseQuiver& q) {
        for (auto& v : q.vertices)
            for (std::size_t i = 0; i < v.m_parts.size(); ++i) {
                AMod l = brick_label(v, i);
                bool legal = left_mutation(v, i).has_value();
                if ((l.dim() != 0) != legal)
                    return false;
                if (l.dim() && hom_dim(l, l) != 1)
                    return false;
            }
        return true;
    };
    r.add("label_iff_mutation", labels_ok(hasse) && labels_ok(tilde_hasse));
    return r;
}

}  // namespace tau
