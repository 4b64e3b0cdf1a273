#pragma once

#include <map>
#include <memory>
#include <vector>

#include "tau/algebra.hpp"

namespace testutil {

using Perm = std::vector<int>;

inline Perm compose(const Perm& a, const Perm& b)  // a after b
{
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[b[i]];
    return c;
}

// Elements by BFS from the identity; generators first after it when distinct.
inline std::vector<Perm> closure(const std::vector<Perm>& gens)
{
    Perm id(gens[0].size());
    for (std::size_t i = 0; i < id.size(); ++i)
        id[i] = int(i);
    std::vector<Perm> el{id};
    std::map<Perm, std::size_t> idx{{id, 0}};
    for (std::size_t k = 0; k < el.size(); ++k)
        for (auto& g : gens) {
            Perm h = compose(g, el[k]);
            if (!idx.count(h)) {
                idx[h] = el.size();
                el.push_back(h);
            }
        }
    return el;
}

inline std::unique_ptr<tau::Algebra> group_algebra(const tau::Field& f, const std::vector<Perm>& gens)
{
    auto el = closure(gens);
    std::map<Perm, std::size_t> idx;
    for (std::size_t i = 0; i < el.size(); ++i)
        idx[el[i]] = i;
    const std::size_t n = el.size();
    std::vector<tau::Matrix> left;
    for (std::size_t i = 0; i < n; ++i) {
        tau::Matrix l(f, n, n);
        for (std::size_t j = 0; j < n; ++j)
            l.at(idx[compose(el[i], el[j])], j) = 1;
        left.push_back(std::move(l));
    }
    std::vector<tau::Vec> g;
    for (auto& p : gens) {
        tau::Vec v(n, 0);
        v[idx[p]] = 1;
        g.push_back(v);
    }
    tau::Vec unit(n, 0), form(n, 0);
    unit[0] = form[0] = 1;
    return std::make_unique<tau::Algebra>(f, std::move(left), unit, g, form);
}

// Module on which every generator acts by the given scalar.
inline tau::AMod scalar_module(const tau::Algebra& a, const std::vector<long long>& values)
{
    std::vector<tau::Matrix> g;
    for (auto v : values)
        g.push_back(tau::Matrix::from_ints(a.field(), 1, 1, {v}));
    return tau::AMod(a, std::move(g));
}

// Hom dimension from the full Kronecker system X*A_s = B_s*X.
inline std::size_t brute_hom_dim(const tau::AMod& x, const tau::AMod& y)
{
    const tau::Field& f = x.field();
    const std::size_t n = x.dim(), m = y.dim();
    if (!n || !m)
        return 0;
    std::vector<tau::Matrix> rows;
    for (std::size_t s = 0; s < x.gens().size(); ++s) {
        tau::Matrix a = tau::mat_kron(tau::Matrix::identity(f, m), x.gen(s).transpose());
        tau::Matrix b = tau::mat_kron(y.gen(s), tau::Matrix::identity(f, n));
        rows.push_back(a - b);
    }
    return m * n - tau::mat_rank(tau::vstack(rows, f, m * n));
}

}  // namespace testutil
