#include <algorithm>
#include <cctype>
#include <numeric>

#include "tau/grouprep.hpp"

namespace tau {

NormalPair::NormalPair(const GroupAlgebra& small, const GroupAlgebra& big, std::vector<std::string> w)
    : g(&small), gt(&big), words(std::move(w))
{
    const PermGroup& G = small.group;
    const PermGroup& T = big.group;
    if (small.field != big.field)
        throw std::invalid_argument("group algebras over different fields");
    if (words.size() != G.generators().size())
        throw NotSubgroup();
    for (std::size_t s = 0; s < words.size(); ++s)
        if (T.eval_word(words[s]) != G.generators()[s])
            throw NotSubgroup();
    for (auto& x : T.generators()) {
        Perm xi = perm_inv(x);
        for (auto& h : G.generators())
            if (!G.contains(perm_mul(x, perm_mul(h, xi))))
                throw NotNormal();
    }
    g_in_gt.resize(G.order());
    for (std::size_t i = 0; i < G.order(); ++i)
        g_in_gt[i] = T.index_of(G.element(i));

    // Left cosets tG, each represented by its lexicographically least element.
    std::vector<std::size_t> order(T.order());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return T.element(a) < T.element(b); });
    coset_of.assign(T.order(), std::size_t(-1));
    for (auto x : order) {
        if (coset_of[x] != std::size_t(-1))
            continue;
        std::size_t c = cosets.size();
        cosets.push_back(x);
        for (auto& h : G.elements())
            coset_of[T.index_of(perm_mul(T.element(x), h))] = c;
    }
}

std::size_t NormalPair::twist(std::size_t x, std::size_t i, std::size_t& j) const
{
    const PermGroup& T = gt->group;
    Perm y = perm_mul(T.element(x), T.element(cosets[i]));
    j = coset_of[T.index_of(y)];
    return g->group.index_of(perm_mul(perm_inv(T.element(cosets[j])), y));
}

AMod restrict_module(const AMod& u, const NormalPair& np)
{
    const Field& f = *np.g->field;
    if (&u.algebra() != np.gt->algebra.get())
        throw std::invalid_argument("module is not over the overgroup");
    std::vector<Matrix> inv(u.gens().size());
    std::vector<Matrix> gens;
    for (auto& w : np.words) {
        Matrix m = Matrix::identity(f, u.dim());
        for (char c : w) {
            std::size_t s = std::size_t(std::tolower(static_cast<unsigned char>(c)) - 'a');
            if (std::isupper(static_cast<unsigned char>(c))) {
                if (!inv[s].has_field())
                    inv[s] = *mat_inverse(u.gen(s));
                m = m * inv[s];
            } else {
                m = m * u.gen(s);
            }
        }
        gens.push_back(std::move(m));
    }
    if (u.dim() == 0)
        return AMod::zero(*np.g->algebra);
    return np.g->module(std::move(gens));
}

AMod induce_module(const AMod& u, const NormalPair& np)
{
    const Field& f = *np.g->field;
    if (&u.algebra() != np.g->algebra.get())
        throw std::invalid_argument("module is not over the subgroup");
    const std::size_t n = np.index(), d = u.dim();
    if (d == 0)
        return AMod::zero(*np.gt->algebra);
    const PermGroup& T = np.gt->group;
    std::map<std::size_t, Matrix> cache;
    std::vector<Matrix> gens;
    for (auto& x : T.generators()) {
        std::size_t xi = T.index_of(x);
        Matrix m(f, n * d, n * d);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j;
            std::size_t h = np.twist(xi, i, j);
            auto it = cache.find(h);
            if (it == cache.end())
                it = cache.emplace(h, np.g->element_matrix(u, h)).first;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    m.at(j * d + r, i * d + c) = it->second(r, c);
        }
        gens.push_back(std::move(m));
    }
    return np.gt->module(std::move(gens));
}

AMod conjugate_module(std::size_t x, const AMod& u, const NormalPair& np)
{
    const PermGroup& G = np.g->group;
    const PermGroup& T = np.gt->group;
    Perm xp = T.element(x), xi = perm_inv(xp);
    if (u.dim() == 0)
        return u;
    std::vector<Matrix> gens;
    for (auto& g : G.generators())
        gens.push_back(np.g->element_matrix(u, G.index_of(perm_mul(xi, perm_mul(g, xp)))));
    return np.g->module(std::move(gens));
}

bool mackey_check(const AMod& u, const NormalPair& np)
{
    AMod lhs = restrict_module(induce_module(u, np), np);
    std::vector<AMod> parts;
    for (auto t : np.cosets)
        parts.push_back(conjugate_module(t, u, np));
    return is_iso(lhs, direct_sum(*np.g->algebra, parts));
}

AMod random_module(const Algebra& a, std::mt19937_64& rng)
{
    const Structure& st = a.structure();
    auto one = [&] {
        const AMod& p = st.pims[rng() % st.count()];
        Vec v(p.dim());
        for (auto& x : v)
            x = a.field().random(rng);
        AMod q = quotient(p, spin_closure(p, Matrix::column(a.field(), v))).target;
        return q.dim() ? q : top(p);
    };
    AMod m = one();
    if (rng() % 2)
        m = direct_sum(m, one());
    return m;
}

}  // namespace tau
