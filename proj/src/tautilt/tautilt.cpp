#include "tau/tautilt.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <thread>

namespace tau {

namespace {

Matrix images_of(const std::vector<Matrix>& maps, const Field& f, std::size_t rows)
{
    if (maps.empty())
        return Matrix(f, rows, 0);
    Matrix all = hstack(maps, f, rows);
    return all.cols() ? col_basis(all) : Matrix(f, rows, 0);
}

std::vector<std::size_t> p_indices(const STiltPair& x)
{
    std::vector<std::size_t> out;
    for (auto& p : x.p_parts)
        out.push_back(pim_index(p));
    std::sort(out.begin(), out.end());
    return out;
}

bool match_parts(const std::vector<AMod>& a, const std::vector<AMod>& b)
{
    if (a.size() != b.size())
        return false;
    std::vector<bool> used(b.size(), false);
    for (auto& x : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j)
            if (!used[j] && is_iso_indecomposable(x, b[j]))
                used[j] = found = true;
        if (!found)
            return false;
    }
    return true;
}

}  // namespace

const Algebra& STiltPair::algebra() const
{
    if (!m_parts.empty())
        return m_parts[0].algebra();
    if (!p_parts.empty())
        return p_parts[0].algebra();
    throw std::logic_error("empty pair has no algebra");
}

AMod STiltPair::m_module() const
{
    return direct_sum(algebra(), m_parts);
}

AMod STiltPair::p_module() const
{
    return direct_sum(algebra(), p_parts);
}

STiltPair top_pair(const Algebra& a)
{
    return {a.structure().pims, {}};
}

STiltPair bottom_pair(const Algebra& a)
{
    return {{}, a.structure().pims};
}

bool is_valid_pair(const STiltPair& x)
{
    const Algebra& a = x.algebra();
    if (x.size() != a.structure().count())
        return false;
    AMod m = x.m_module();
    if (!is_tau_rigid(m))
        return false;
    for (auto& p : x.p_parts)
        if (m.dim() && hom_dim(p, m) != 0)
            return false;
    for (std::size_t i = 0; i < x.m_parts.size(); ++i)
        for (std::size_t j = i + 1; j < x.m_parts.size(); ++j)
            if (is_iso_indecomposable(x.m_parts[i], x.m_parts[j]))
                return false;
    auto pi = p_indices(x);
    return std::adjacent_find(pi.begin(), pi.end()) == pi.end() &&
           std::find(pi.begin(), pi.end(), std::size_t(-1)) == pi.end();
}

bool is_tau_rigid(const AMod& m)
{
    if (m.dim() == 0)
        return true;
    AMod t = tau::tau(m);
    return t.dim() == 0 || hom_dim(m, t) == 0;
}

bool is_support_tau_tilting(const AMod& m)
{
    if (m.dim() == 0)
        return true;
    if (!is_tau_rigid(m))
        return false;
    std::size_t support = 0;
    for (auto c : composition_vector(m))
        support += c != 0;
    return decompose(m).size() == support;
}

Matrix trace(const AMod& m, const AMod& v)
{
    if (m.dim() == 0 || v.dim() == 0)
        return Matrix(v.field(), v.dim(), 0);
    return images_of(hom_basis(m, v), v.field(), v.dim());
}

bool in_fac(const AMod& m, const AMod& v)
{
    if (v.dim() == 0)
        return true;
    return trace(m, v).cols() == v.dim();
}

bool in_sub(const AMod& n, const AMod& v)
{
    if (v.dim() == 0)
        return true;
    if (n.dim() == 0)
        return false;
    auto homs = hom_basis(v, n);
    if (homs.empty())
        return false;
    return mat_rank(vstack(homs, v.field(), v.dim())) == v.dim();
}

bool in_torsion_closure(const AMod& s, const AMod& v0)
{
    AMod v = v0;
    while (v.dim() > 0) {
        Matrix t = trace(s, v);
        if (t.cols() == 0)
            return false;
        v = quotient(v, t).target;
    }
    return true;
}

std::optional<STiltPair> left_mutation(const STiltPair& x, std::size_t at)
{
    if (at >= x.m_parts.size())
        throw IndexOutOfRange();
    const Algebra& a = x.algebra();
    const Field& f = a.field();
    const AMod& xm = x.m_parts[at];
    std::vector<AMod> u;
    for (std::size_t i = 0; i < x.m_parts.size(); ++i)
        if (i != at)
            u.push_back(x.m_parts[i]);
    AMod um = direct_sum(a, u);
    if (in_fac(um, xm))
        return std::nullopt;

    // Minimal left add(U)-approximation: for each U_j, maps X -> U_j independent
    // modulo those factoring through radical maps inside add(U).
    std::vector<std::vector<Matrix>> homs(u.size());
    for (std::size_t j = 0; j < u.size(); ++j)
        homs[j] = hom_basis(xm, u[j]);
    std::vector<Matrix> chosen;
    std::vector<AMod> targets;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (homs[j].empty())
            continue;
        Echelon ech(f, u[j].dim() * xm.dim());
        for (std::size_t l = 0; l < u.size(); ++l) {
            if (homs[l].empty())
                continue;
            for (auto& r : radical_homs(u[l], u[j]))
                for (auto& h : homs[l])
                    ech.insert((r * h).data());
        }
        for (auto& h : homs[j])
            if (ech.insert(h.data())) {
                chosen.push_back(h);
                targets.push_back(u[j]);
            }
    }
    STiltPair out;
    out.p_parts = x.p_parts;
    AMod y;
    if (chosen.empty()) {
        y = AMod::zero(a);
    } else {
        AMod tgt = direct_sum(a, targets);
        y = cokernel({xm, tgt, vstack(chosen, f, xm.dim())}).target;
    }
    if (y.dim() == 0) {
        const Structure& st = a.structure();
        auto used = p_indices(x);
        std::optional<std::size_t> fresh;
        for (std::size_t i = 0; i < st.count(); ++i) {
            if (std::binary_search(used.begin(), used.end(), i))
                continue;
            if (um.dim() && hom_dim(st.pims[i], um) != 0)
                continue;
            if (fresh)
                throw std::logic_error("mutation completion is not unique");
            fresh = i;
        }
        if (!fresh)
            throw std::logic_error("mutation has no projective completion");
        out.m_parts = u;
        out.p_parts.push_back(st.pims[*fresh]);
        return out;
    }
    auto parts = decompose(y);
    if (parts.size() != 1 || parts[0].second != 1)
        throw std::logic_error("mutation cokernel is not indecomposable");
    out.m_parts = x.m_parts;
    out.m_parts[at] = parts[0].first;
    return out;
}

AMod brick_label(const STiltPair& x, std::size_t at)
{
    if (at >= x.m_parts.size())
        throw IndexOutOfRange();
    const AMod& xm = x.m_parts[at];
    std::vector<Matrix> maps;
    for (auto& u : x.m_parts)
        for (auto& r : radical_homs(u, xm))
            maps.push_back(r);
    AMod label = quotient(xm, images_of(maps, xm.field(), xm.dim())).target;
    if (label.dim() && hom_dim(label, label) != 1)
        throw std::logic_error("label is not a brick");
    return label;
}

Semibrick left_semibrick(const STiltPair& x)
{
    Semibrick out;
    for (std::size_t i = 0; i < x.m_parts.size(); ++i) {
        AMod b = brick_label(x, i);
        if (b.dim())
            out.push_back(b);
    }
    return out;
}

AMod dual_pair(const STiltPair& x)
{
    std::vector<AMod> parts;
    for (auto& m : x.m_parts)
        parts.push_back(tau::tau(m));
    for (auto& p : x.p_parts)
        parts.push_back(p);
    return direct_sum(x.algebra(), parts);
}

Semibrick right_semibrick(const AMod& n)
{
    if (n.dim() == 0)
        return {};
    const Field& f = n.field();
    auto parts = decompose_summands(n);
    std::vector<Matrix> rad;
    for (auto& src : parts)
        for (auto& dst : parts)
            for (auto& r : radical_homs(src.module, dst.module))
                rad.push_back(dst.inclusion * r * src.projection);
    Matrix s = rad.empty() ? Matrix::identity(f, n.dim()) : mat_nullspace(vstack(rad, f, n.dim()));
    Semibrick out;
    for (auto& [b, k] : decompose(restrict_to(n, s)))
        out.push_back(b);
    return out;
}

bool same_pair(const STiltPair& x, const STiltPair& y)
{
    return p_indices(x) == p_indices(y) && match_parts(x.m_parts, y.m_parts);
}

bool fac_leq(const STiltPair& y, const STiltPair& x)
{
    AMod mx = x.m_module();
    for (auto& part : y.m_parts)
        if (!in_fac(mx, part))
            return false;
    return true;
}

unsigned worker_count()
{
    if (const char* env = std::getenv("TAUTILT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0)
            return unsigned(v);
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

namespace {

using Fingerprint = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;

Fingerprint fingerprint(const STiltPair& x)
{
    const Structure& st = x.algebra().structure();
    std::vector<std::size_t> comp(st.count(), 0);
    for (auto& m : x.m_parts) {
        auto c = composition_vector(m);
        for (std::size_t i = 0; i < c.size(); ++i)
            comp[i] += c[i];
    }
    return {comp, p_indices(x)};
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& fn)
{
    threads = std::max(1u, std::min<unsigned>(threads, unsigned(n)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next++;
                if (i >= n)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lk(err_mu);
                    if (!err)
                        err = std::current_exception();
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (err)
        std::rethrow_exception(err);
}

}  // namespace

HasseQuiver enumerate_hasse(const Algebra& a, std::size_t max_vertices, unsigned threads)
{
    if (!a.is_symmetric())
        throw NotSymmetric();
    if (threads == 0)
        threads = worker_count();
    a.structure();
    a.opposite().structure();

    HasseQuiver q;
    std::map<Fingerprint, std::vector<std::size_t>> buckets;
    STiltPair start = top_pair(a);
    buckets[fingerprint(start)].push_back(0);
    q.vertices.push_back(start);
    std::vector<std::size_t> frontier{0};

    struct Task {
        std::size_t vertex, at;
        std::optional<STiltPair> result;
        AMod label;
        Fingerprint key;
    };
    while (!frontier.empty()) {
        std::vector<Task> tasks;
        for (auto v : frontier)
            for (std::size_t i = 0; i < q.vertices[v].m_parts.size(); ++i)
                tasks.push_back({v, i, std::nullopt, AMod(), {}});
        parallel_for(tasks.size(), threads, [&](std::size_t k) {
            Task& t = tasks[k];
            const STiltPair& x = q.vertices[t.vertex];
            t.result = left_mutation(x, t.at);
            if (t.result) {
                t.label = brick_label(x, t.at);
                t.key = fingerprint(*t.result);
            }
        });
        std::vector<std::size_t> next;
        for (auto& t : tasks) {
            if (!t.result)
                continue;
            std::optional<std::size_t> found;
            for (auto id : buckets[t.key])
                if (same_pair(q.vertices[id], *t.result)) {
                    found = id;
                    break;
                }
            if (!found) {
                if (q.vertices.size() >= max_vertices) {
                    q.complete = false;
                    continue;
                }
                found = q.vertices.size();
                q.vertices.push_back(std::move(*t.result));
                buckets[t.key].push_back(*found);
                next.push_back(*found);
            }
            q.arrows.push_back({t.vertex, *found, t.at, t.label});
        }
        frontier = std::move(next);
    }
    return q;
}

std::vector<std::size_t> pim_multiplicities(const AMod& p)
{
    const Structure& st = p.algebra().structure();
    std::vector<std::size_t> out(st.count(), 0);
    for (auto& [m, k] : decompose(p)) {
        std::size_t i = pim_index(m);
        if (i == std::size_t(-1))
            throw std::invalid_argument("module is not projective");
        out[i] += k;
    }
    return out;
}

TwoTermComplex two_term_silting(const STiltPair& x)
{
    const Algebra& a = x.algebra();
    const Field& f = a.field();
    AMod m = x.m_module();
    AMod p = x.p_module();
    Presentation pr = minimal_presentation(m);
    TwoTermComplex t;
    t.p0 = pr.p0;
    t.p1 = direct_sum(pr.p1, p);
    t.d = hstack({pr.f1, Matrix(f, pr.p0.dim(), p.dim())}, f, pr.p0.dim());
    t.mult0 = pr.mult0;
    t.mult1 = pr.mult1;
    for (auto& part : x.p_parts)
        ++t.mult1[pim_index(part)];
    return t;
}

bool is_two_term_presilting(const TwoTermComplex& t)
{
    if (t.p1.dim() == 0 || t.p0.dim() == 0)
        return true;
    const Field& f = t.p0.field();
    auto homs = hom_basis(t.p1, t.p0);
    if (homs.empty())
        return true;
    Echelon ech(f, t.p0.dim() * t.p1.dim());
    for (auto& h : hom_basis(t.p0, t.p0))
        ech.insert((h * t.d).data());
    for (auto& h : hom_basis(t.p1, t.p1))
        ech.insert((t.d * h).data());
    for (auto& h : homs)
        if (!ech.contains(h.data()))
            return false;
    return true;
}

std::vector<long> g_vector(const TwoTermComplex& t)
{
    auto m0 = t.mult0.empty() ? pim_multiplicities(t.p0) : t.mult0;
    auto m1 = t.mult1.empty() ? pim_multiplicities(t.p1) : t.mult1;
    std::vector<long> g(std::max(m0.size(), m1.size()), 0);
    for (std::size_t i = 0; i < m0.size(); ++i)
        g[i] += long(m0[i]);
    for (std::size_t i = 0; i < m1.size(); ++i)
        g[i] -= long(m1[i]);
    return g;
}

TwoSMC two_smc(const STiltPair& x)
{
    return {left_semibrick(x), right_semibrick(dual_pair(x))};
}

bool validate_two_smc(const TwoSMC& c)
{
    auto orthogonal = [](const std::vector<AMod>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].dim() == 0 || hom_dim(v[i], v[i]) != 1)
                return false;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (i != j && hom_dim(v[i], v[j]) != 0)
                    return false;
        }
        return true;
    };
    if (!orthogonal(c.degree0) || !orthogonal(c.degree1))
        return false;
    for (auto& s : c.degree0)
        for (auto& r : c.degree1)
            if (hom_dim(s, r) != 0 || ext1_dim(s, r) != 0)
                return false;
    const AMod* any = !c.degree0.empty() ? &c.degree0[0] : !c.degree1.empty() ? &c.degree1[0] : nullptr;
    if (!any)
        return false;
    return c.degree0.size() + c.degree1.size() == any->algebra().structure().count();
}

}  // namespace tau
