#pragma once

#include <map>
#include <vector>

#include "tau/tautilt.hpp"

namespace oracle {

// Canonical key of a subspace: its reduced row echelon form.
inline std::vector<tau::Scalar> subspace_key(const tau::Matrix& cols, std::size_t n)
{
    std::vector<tau::Scalar> key{tau::Scalar(cols.cols())};
    if (cols.cols() == 0)
        return key;
    tau::Rref r = tau::mat_rref(cols.transpose());
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        key.insert(key.end(), r.reduced.row(i), r.reduced.row(i) + n);
    return key;
}

// Every submodule of the regular module, from cyclic submodules closed under sums.
inline std::vector<tau::Matrix> all_submodules(const tau::Algebra& a)
{
    const tau::Field& f = a.field();
    const std::size_t n = a.dim();
    tau::AMod reg = tau::AMod::regular(a);
    std::map<std::vector<tau::Scalar>, tau::Matrix> subs;
    subs[subspace_key(tau::Matrix(f, n, 0), n)] = tau::Matrix(f, n, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= f.q();
    for (std::size_t c = 1; c < total; ++c) {
        tau::Vec v(n);
        std::size_t r = c;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = tau::Scalar(r % f.q());
            r /= f.q();
        }
        tau::Matrix s = tau::spin_closure(reg, tau::Matrix::column(f, v));
        subs.emplace(subspace_key(s, n), s);
    }
    for (bool grew = true; grew;) {
        grew = false;
        std::vector<tau::Matrix> cur;
        for (auto& [k, m] : subs)
            cur.push_back(m);
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                tau::Matrix sum = tau::hstack({cur[i], cur[j]}, f, n);
                tau::Matrix b = sum.cols() ? tau::col_basis(sum) : sum;
                grew |= subs.emplace(subspace_key(b, n), b).second;
            }
    }
    std::vector<tau::Matrix> out;
    for (auto& [k, m] : subs)
        out.push_back(m);
    return out;
}

struct Vertex {
    tau::AMod m;
    std::vector<std::size_t> p;  // PIM indices
};

struct Arrow {
    std::size_t from, to;
    tau::AMod label;
};

struct Result {
    std::vector<Vertex> vertices;
    std::vector<Arrow> arrows;
};

// Support tau-tilting modules among quotients of the regular module, ordered by
// Fac inclusion; each cover relation is labeled by the unique brick quotient B
// with B in Fac M_x and Hom(M_y, B) = 0.
inline Result brute_force_quotients(const tau::Algebra& a)
{
    const tau::Structure& st = a.structure();
    tau::AMod reg = tau::AMod::regular(a);
    std::vector<tau::AMod> quotients;
    for (auto& n : all_submodules(a))
        quotients.push_back(tau::quotient(reg, n).target);

    Result r;
    for (auto& q : quotients) {
        if (!tau::is_support_tau_tilting(q))
            continue;
        bool dup = false;
        for (auto& v : r.vertices)
            dup |= tau::is_iso(v.m, q);
        if (dup)
            continue;
        Vertex v{q, {}};
        for (std::size_t i = 0; i < st.count(); ++i)
            if (q.dim() == 0 || tau::hom_dim(st.pims[i], q) == 0)
                v.p.push_back(i);
        r.vertices.push_back(v);
    }
    const std::size_t nv = r.vertices.size();
    auto leq = [&](std::size_t y, std::size_t x) { return tau::in_fac(r.vertices[x].m, r.vertices[y].m); };
    std::vector<tau::AMod> bricks;
    for (auto& q : quotients)
        if (q.dim() && tau::hom_dim(q, q) == 1)
            bricks.push_back(q);
    for (std::size_t x = 0; x < nv; ++x)
        for (std::size_t y = 0; y < nv; ++y) {
            if (x == y || !leq(y, x) || leq(x, y))
                continue;
            bool cover = true;
            for (std::size_t z = 0; z < nv && cover; ++z)
                if (z != x && z != y && leq(z, x) && leq(y, z) && !leq(x, z) && !leq(z, y))
                    cover = false;
            if (!cover)
                continue;
            std::vector<tau::AMod> found;
            for (auto& b : bricks) {
                bool hom_zero = r.vertices[y].m.dim() == 0 || tau::hom_dim(r.vertices[y].m, b) == 0;
                if (hom_zero && tau::in_fac(r.vertices[x].m, b)) {
                    bool dup = false;
                    for (auto& g : found)
                        dup |= tau::is_iso(g, b);
                    if (!dup)
                        found.push_back(b);
                }
            }
            r.arrows.push_back({x, y, found.size() == 1 ? found[0] : tau::AMod::zero(a)});
        }
    return r;
}

// Same vertices, arrows and labels as a BFS enumeration.
inline bool matches(const Result& r, const tau::HasseQuiver& q)
{
    if (r.vertices.size() != q.vertices.size() || r.arrows.size() != q.arrows.size())
        return false;
    std::vector<std::size_t> map(r.vertices.size(), std::size_t(-1));
    for (std::size_t i = 0; i < r.vertices.size(); ++i) {
        tau::STiltPair x;
        for (auto& [m, k] : tau::decompose(r.vertices[i].m))
            x.m_parts.push_back(m);
        for (auto p : r.vertices[i].p)
            x.p_parts.push_back(r.vertices[i].m.algebra().structure().pims[p]);
        for (std::size_t j = 0; j < q.vertices.size(); ++j)
            if (tau::same_pair(x, q.vertices[j]))
                map[i] = j;
        if (map[i] == std::size_t(-1))
            return false;
    }
    for (auto& ar : r.arrows) {
        if (ar.label.dim() == 0)
            return false;
        bool found = false;
        for (auto& qa : q.arrows)
            if (qa.from == map[ar.from] && qa.to == map[ar.to] && tau::is_iso(qa.label, ar.label))
                found = true;
        if (!found)
            return false;
    }
    return true;
}

}  // namespace oracle
