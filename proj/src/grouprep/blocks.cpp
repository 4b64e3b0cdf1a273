#include <algorithm>

#include "tau/grouprep.hpp"

namespace tau {

namespace {

Vec group_mul(const PermGroup& g, const Field& f, const Vec& a, const Vec& b)
{
    Vec out(g.order(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j]) {
                std::size_t k = g.index_of(perm_mul(g.element(i), g.element(j)));
                out[k] = f.add(out[k], f.mul(a[i], b[j]));
            }
    }
    return out;
}

// Primitive idempotents of a commutative algebra given by left-regular
// matrices in a basis where `unit` is the identity.
std::vector<Vec> commutative_idempotents(const Field& f, const std::vector<Matrix>& left, const Vec& unit,
                                         std::uint64_t seed)
{
    const std::size_t r = left.size();
    auto lmat = [&](const Vec& z) {
        Matrix m(f, r, r);
        for (std::size_t i = 0; i < r; ++i)
            if (z[i])
                m.axpy(z[i], left[i]);
        return m;
    };
    Matrix rad = trace_form_radical(f, left);
    std::mt19937_64 rng(seed);
    std::vector<Vec> done, todo{unit};
    while (!todo.empty()) {
        Vec e = todo.back();
        todo.pop_back();
        Matrix le = lmat(e);
        Matrix ideal = col_basis(le);
        const std::size_t d = ideal.cols();
        std::size_t jd = rad.cols() ? mat_rank(le * rad) : 0;
        if (d - jd == 1) {
            done.push_back(e);
            continue;
        }
        Matrix li = mat_left_inverse(ideal);
        bool split = false;
        for (int attempt = 0; attempt < 200 && !split; ++attempt) {
            Vec z(r);
            for (auto& x : z)
                x = f.random(rng);
            z = le.apply(z);
            Matrix act = li * (lmat(z) * ideal);
            auto factors = poly::coprime_factors(f, min_poly(act));
            if (factors.size() == 1) {
                const auto& fac = factors[0];
                if (poly::deg(fac.base) == fac.degree && fac.degree == d - jd)
                    throw FieldNotSplitting(fac.degree);
                continue;
            }
            Poly h = {1};
            for (unsigned k = 0; k < factors[0].multiplicity; ++k)
                h = poly::mul(f, h, factors[0].base);
            Matrix x = poly::eval(h, act);
            Matrix ker = mat_nullspace(x), img = col_basis(x);
            Matrix t = hstack({ker, img}, f, d);
            Vec c = mat_inverse(t)->apply(li.apply(e));
            Matrix kb = ideal * ker, ib = ideal * img;
            Vec e1(r, 0), e2(r, 0);
            for (std::size_t i = 0; i < kb.cols(); ++i)
                for (std::size_t k = 0; k < r; ++k)
                    e1[k] = f.add(e1[k], f.mul(c[i], kb(k, i)));
            for (std::size_t i = 0; i < ib.cols(); ++i)
                for (std::size_t k = 0; k < r; ++k)
                    e2[k] = f.add(e2[k], f.mul(c[kb.cols() + i], ib(k, i)));
            todo.push_back(e1);
            todo.push_back(e2);
            split = true;
        }
        if (!split)
            throw std::runtime_error("central idempotent splitting did not converge");
    }
    return done;
}

}  // namespace

std::vector<BlockIdem> central_primitive_idempotents(const GroupAlgebra& h)
{
    const PermGroup& g = h.group;
    const Field& f = *h.field;
    const std::size_t n = g.order();
    auto classes = g.conjugacy_classes();
    const std::size_t r = classes.size();
    std::vector<std::size_t> class_of(n);
    for (std::size_t c = 0; c < r; ++c)
        for (auto i : classes[c])
            class_of[i] = c;
    std::vector<Vec> sums(r, Vec(n, 0));
    for (std::size_t c = 0; c < r; ++c)
        for (auto i : classes[c])
            sums[c][i] = 1;
    // Structure constants of the center in the class-sum basis.
    std::vector<Matrix> left(r, Matrix(f, r, r));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            Vec prod = group_mul(g, f, sums[a], sums[b]);
            for (std::size_t c = 0; c < r; ++c)
                left[a].at(c, b) = prod[classes[c][0]];
        }
    Vec unit(r, 0);
    unit[class_of[0]] = 1;
    auto idems = commutative_idempotents(f, left, unit, 0x5eed);

    std::vector<BlockIdem> out;
    for (auto& z : idems) {
        BlockIdem b;
        b.idempotent.assign(n, 0);
        for (std::size_t c = 0; c < r; ++c)
            if (z[c])
                for (auto i : classes[c])
                    b.idempotent[i] = z[c];
        Scalar aug = 0;
        for (auto x : b.idempotent)
            aug = f.add(aug, x);
        b.principal = aug != 0;

        // Basis e*w over the group elements in breadth-first order.
        Echelon ech(f, n);
        std::vector<Vec> basis;
        for (std::size_t k = 0; k < n; ++k) {
            Vec v(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                if (b.idempotent[i]) {
                    std::size_t j = g.index_of(perm_mul(g.element(i), g.element(k)));
                    v[j] = f.add(v[j], b.idempotent[i]);
                }
            if (ech.insert(v))
                basis.push_back(std::move(v));
        }
        const std::size_t d = basis.size();
        b.basis = Matrix(f, n, d);
        for (std::size_t k = 0; k < d; ++k)
            b.basis.set_col(k, basis[k]);
        Matrix li = mat_left_inverse(b.basis);
        std::vector<Matrix> bl;
        for (std::size_t i = 0; i < d; ++i) {
            Matrix prod(f, n, d);
            for (std::size_t j = 0; j < d; ++j)
                prod.set_col(j, group_mul(g, f, basis[i], basis[j]));
            bl.push_back(li * prod);
        }
        Vec bunit = li.apply(b.idempotent);
        std::vector<Vec> gens;
        for (auto& p : g.generators()) {
            Vec gv(n, 0);
            gv[g.index_of(p)] = 1;
            gens.push_back(li.apply(group_mul(g, f, b.idempotent, gv)));
        }
        Vec form(d);
        for (std::size_t k = 0; k < d; ++k)
            form[k] = basis[k][0];
        b.algebra = std::make_shared<Algebra>(f, std::move(bl), bunit, std::move(gens), form,
                                              h.name + (b.principal ? ".B0" : ".B"));
        out.push_back(std::move(b));
    }
    std::stable_sort(out.begin(), out.end(), [](const BlockIdem& a, const BlockIdem& b) {
        if (a.principal != b.principal)
            return a.principal;
        if (a.basis.cols() != b.basis.cols())
            return a.basis.cols() > b.basis.cols();
        return a.idempotent < b.idempotent;
    });
    return out;
}

AMod block_cut(const BlockIdem& b, const AMod& u)
{
    if (u.dim() == 0)
        return AMod::zero(*b.algebra);
    Matrix e = u.act(b.idempotent);
    if (e.is_zero())
        return AMod::zero(*b.algebra);
    Matrix basis = col_basis(e);
    Matrix li = mat_left_inverse(basis);
    std::vector<Matrix> gens;
    for (auto& x : u.gens())
        gens.push_back(li * (x * basis));
    return AMod(*b.algebra, std::move(gens));
}

AMod inflate_block_module(const GroupAlgebra& h, const AMod& m)
{
    if (m.dim() == 0)
        return AMod::zero(*h.algebra);
    return h.module(m.gens());
}

bool covers(const BlockIdem& bt, const BlockIdem& b, const NormalPair& np)
{
    const PermGroup& T = np.gt->group;
    const Field& f = *np.gt->field;
    Vec eb(T.order(), 0);
    for (std::size_t i = 0; i < b.idempotent.size(); ++i)
        eb[np.g_in_gt[i]] = b.idempotent[i];
    Vec prod = group_mul(T, f, eb, bt.idempotent);
    return std::any_of(prod.begin(), prod.end(), [](Scalar s) { return s != 0; });
}

std::vector<Perm> inertia_of_block(const BlockIdem& b, const NormalPair& np)
{
    const PermGroup& G = np.g->group;
    const PermGroup& T = np.gt->group;
    std::vector<Perm> out = G.generators();
    for (std::size_t c = 1; c < np.cosets.size(); ++c) {
        const Perm& x = T.element(np.cosets[c]);
        Perm xi = perm_inv(x);
        Vec conj(G.order(), 0);
        for (std::size_t i = 0; i < G.order(); ++i)
            if (b.idempotent[i])
                conj[G.index_of(perm_mul(x, perm_mul(G.element(i), xi)))] = b.idempotent[i];
        if (conj == b.idempotent)
            out.push_back(x);
    }
    return out;
}

}  // namespace tau
