#include "tau/algebra.hpp"

namespace tau {

std::vector<Matrix> hom_basis(const AMod& x, const AMod& y)
{
    const Field& f = x.field();
    const std::size_t n = x.dim(), m = y.dim();
    if (n == 0 || m == 0)
        return {};
    const SpinData& sd = x.spin();
    const std::size_t t = sd.seeds.size();
    const std::size_t unknowns = t * m;

    // Image of b_k is L[k] applied to the image of its seed.
    std::vector<Matrix> L(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (sd.via[k] == std::size_t(-1))
            L[k] = Matrix::identity(f, m);
        else
            L[k] = y.gen(sd.via[k]) * L[sd.parent[k]];
    }

    Echelon eqs(f, unknowns);
    for (auto& rel : sd.relations) {
        if (eqs.rank() == unknowns)
            break;
        Matrix block(f, m, unknowns);
        auto add_into = [&](std::size_t seed, const Matrix& c, Scalar scale) {
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    Scalar v = c(i, j);
                    if (v)
                        block.at(i, seed * m + j) = f.add(block(i, seed * m + j), f.mul(scale, v));
                }
        };
        add_into(sd.seed_of[rel.from], y.gen(rel.gen) * L[rel.from], 1);
        for (std::size_t k = 0; k < n; ++k)
            if (rel.coeffs[k])
                add_into(sd.seed_of[k], L[k], f.neg(rel.coeffs[k]));
        for (std::size_t i = 0; i < m; ++i) {
            Vec row(block.row(i), block.row(i) + unknowns);
            eqs.insert(std::move(row));
            if (eqs.rank() == unknowns)
                break;
        }
    }
    if (eqs.rank() == unknowns)
        return {};

    const auto& rows = eqs.rows();
    Matrix a(f, rows.size(), unknowns);
    for (std::size_t i = 0; i < rows.size(); ++i)
        std::copy(rows[i].begin(), rows[i].end(), a.row(i));
    Matrix ns = mat_nullspace(a);

    std::vector<Matrix> out;
    out.reserve(ns.cols());
    for (std::size_t c = 0; c < ns.cols(); ++c) {
        Matrix phi_spin(f, m, n);
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t s = sd.seed_of[k];
            Vec w(m);
            for (std::size_t i = 0; i < m; ++i)
                w[i] = ns(s * m + i, c);
            phi_spin.set_col(k, L[k].apply(w));
        }
        out.push_back(phi_spin * sd.basis_inv);
    }
    return out;
}

std::size_t hom_dim(const AMod& m, const AMod& n)
{
    return hom_basis(m, n).size();
}

bool is_hom(const AMod& m, const AMod& n, const Matrix& f)
{
    if (f.rows() != n.dim() || f.cols() != m.dim())
        return false;
    for (std::size_t s = 0; s < m.gens().size(); ++s)
        if (f * m.gen(s) != n.gen(s) * f)
            return false;
    return true;
}

Matrix spin_closure(const AMod& m, const Matrix& vectors)
{
    const Field& f = m.field();
    Echelon ech(f, m.dim());
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < vectors.cols(); ++c) {
        Vec v = vectors.col(c);
        if (ech.insert(v))
            basis.push_back(std::move(v));
    }
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t s = 0; s < m.gens().size(); ++s) {
            Vec w = m.gen(s).apply(basis[k]);
            if (ech.insert(w))
                basis.push_back(std::move(w));
        }
    Matrix out(f, m.dim(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        out.set_col(k, basis[k]);
    return out;
}

AMod restrict_to(const AMod& m, const Matrix& basis)
{
    const Algebra& a = m.algebra();
    if (basis.cols() == 0)
        return AMod::zero(a);
    Matrix li = mat_left_inverse(basis);
    std::vector<Matrix> g;
    g.reserve(m.gens().size());
    for (auto& x : m.gens())
        g.push_back(li * (x * basis));
    return AMod(a, std::move(g));
}

ModMap submodule(const AMod& m, const Matrix& vectors)
{
    Matrix b = spin_closure(m, vectors);
    return {restrict_to(m, b), m, b};
}

ModMap quotient(const AMod& m, const Matrix& sub0)
{
    const Field& f = m.field();
    const std::size_t n = m.dim();
    Matrix sub = sub0.cols() ? col_basis(sub0) : Matrix(f, n, 0);
    auto comp = complement_indices(sub);
    Matrix ec(f, n, comp.size());
    for (std::size_t j = 0; j < comp.size(); ++j)
        ec.at(comp[j], j) = 1;
    Matrix t = hstack({sub, ec}, f, n);
    Matrix tinv = *mat_inverse(t);
    Matrix proj = tinv.block(sub.cols(), 0, comp.size(), n);
    std::vector<Matrix> g;
    for (auto& x : m.gens())
        g.push_back(proj * (x * ec));
    AMod q = comp.empty() ? AMod::zero(m.algebra()) : AMod(m.algebra(), std::move(g));
    return {m, q, proj};
}

ModMap kernel(const ModMap& f)
{
    Matrix ns = mat_nullspace(f.matrix);
    return {restrict_to(f.source, ns), f.source, ns};
}

ModMap image(const ModMap& f)
{
    Matrix b = f.matrix.cols() ? col_basis(f.matrix) : Matrix(f.target.field(), f.target.dim(), 0);
    return {restrict_to(f.target, b), f.target, b};
}

ModMap cokernel(const ModMap& f)
{
    return quotient(f.target, f.matrix);
}

AMod direct_sum(const Algebra& a, const std::vector<AMod>& parts)
{
    std::vector<Matrix> g;
    for (std::size_t s = 0; s < a.num_generators(); ++s) {
        std::vector<Matrix> blocks;
        for (auto& p : parts)
            blocks.push_back(p.gen(s));
        g.push_back(block_diag(blocks, a.field()));
    }
    std::size_t total = 0;
    for (auto& p : parts)
        total += p.dim();
    if (total == 0)
        return AMod::zero(a);
    return AMod(a, std::move(g));
}

AMod direct_sum(const AMod& x, const AMod& y)
{
    return direct_sum(x.algebra(), {x, y});
}

AMod change_basis(const AMod& m, const Matrix& t)
{
    Matrix ti = *mat_inverse(t);
    std::vector<Matrix> g;
    for (auto& x : m.gens())
        g.push_back(ti * (x * t));
    return AMod(m.algebra(), std::move(g));
}

}  // namespace tau
