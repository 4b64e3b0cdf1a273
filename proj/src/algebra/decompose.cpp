#include <random>

#include "tau/algebra.hpp"

namespace tau {

namespace {

Matrix random_combination(const std::vector<Matrix>& basis, std::mt19937_64& rng)
{
    const Field& f = basis[0].field();
    Matrix out(f, basis[0].rows(), basis[0].cols());
    for (auto& b : basis)
        out.axpy(f.random(rng), b);
    return out;
}

std::size_t radical_codim(const std::vector<Matrix>& endos)
{
    return endos.size() - matrix_algebra_radical(endos).cols();
}

struct Piece {
    AMod module;
    Matrix inclusion;
    Matrix projection;
};

void split(const Piece& piece, std::mt19937_64& rng, std::vector<Summand>& out)
{
    const AMod& n = piece.module;
    const Field& f = n.field();
    auto endos = hom_basis(n, n);
    if (endos.size() == 1) {
        out.push_back({n, piece.inclusion, piece.projection});
        return;
    }
    std::optional<std::size_t> top_dim;
    for (int attempt = 0; attempt < 200; ++attempt) {
        Matrix phi = random_combination(endos, rng);
        auto factors = poly::coprime_factors(f, min_poly(phi));
        if (factors.size() >= 2) {
            // Fitting decomposition along the first coprime factor.
            Poly h = {1};
            for (unsigned k = 0; k < factors[0].multiplicity; ++k)
                h = poly::mul(f, h, factors[0].base);
            Matrix x = poly::eval(h, phi);
            Matrix ker = mat_nullspace(x);
            Matrix img = col_basis(x);
            Matrix t = hstack({ker, img}, f, n.dim());
            Matrix tinv = *mat_inverse(t);
            const std::size_t a = ker.cols(), b = img.cols();
            Piece p1{restrict_to(n, ker), piece.inclusion * ker, tinv.block(0, 0, a, n.dim()) * piece.projection};
            Piece p2{restrict_to(n, img), piece.inclusion * img, tinv.block(a, 0, b, n.dim()) * piece.projection};
            split(p1, rng, out);
            split(p2, rng, out);
            return;
        }
        const auto& fac = factors[0];
        if (poly::deg(fac.base) != fac.degree)
            continue;
        if (!top_dim)
            top_dim = radical_codim(endos);
        // F[phi] modulo the radical is a field of dimension deg; if it fills
        // End/J, the endomorphism ring is local.
        if (fac.degree == *top_dim) {
            if (fac.degree > 1)
                throw FieldNotSplitting(fac.degree);
            out.push_back({n, piece.inclusion, piece.projection});
            return;
        }
    }
    throw std::runtime_error("decomposition did not converge");
}

}  // namespace

std::vector<Summand> decompose_summands(const AMod& m, std::uint64_t seed)
{
    std::vector<Summand> out;
    if (m.dim() == 0)
        return out;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    Matrix id = Matrix::identity(m.field(), m.dim());
    split({m, id, id}, rng, out);
    return out;
}

std::vector<std::pair<AMod, std::size_t>> decompose(const AMod& m, std::uint64_t seed)
{
    std::vector<std::pair<AMod, std::size_t>> out;
    for (auto& s : decompose_summands(m, seed)) {
        bool found = false;
        for (auto& [x, k] : out)
            if (is_iso_indecomposable(x, s.module)) {
                ++k;
                found = true;
                break;
            }
        if (!found)
            out.emplace_back(s.module, 1);
    }
    return out;
}

bool is_iso_indecomposable(const AMod& x, const AMod& y)
{
    if (x.dim() != y.dim())
        return false;
    if (x.dim() == 0)
        return true;
    for (auto& h : hom_basis(x, y))
        if (mat_rank(h) == x.dim())
            return true;
    return false;
}

bool is_iso(const AMod& m, const AMod& n, std::uint64_t seed)
{
    if (m.dim() != n.dim())
        return false;
    if (m.dim() == 0)
        return true;
    auto homs = hom_basis(m, n);
    if (homs.empty())
        return false;
    std::mt19937_64 rng(seed + 17);
    for (int i = 0; i < 4; ++i)
        if (mat_rank(random_combination(homs, rng)) == m.dim())
            return true;
    auto dm = decompose(m, seed), dn = decompose(n, seed);
    if (dm.size() != dn.size())
        return false;
    std::vector<bool> used(dn.size(), false);
    for (auto& [x, k] : dm) {
        bool matched = false;
        for (std::size_t j = 0; j < dn.size(); ++j)
            if (!used[j] && dn[j].second == k && is_iso_indecomposable(x, dn[j].first)) {
                used[j] = matched = true;
                break;
            }
        if (!matched)
            return false;
    }
    return true;
}

std::vector<Matrix> radical_homs(const AMod& x, const AMod& y)
{
    auto homs = hom_basis(x, y);
    if (homs.empty() || x.dim() != y.dim())
        return homs;
    std::optional<Matrix> psi_inv;
    std::size_t psi_idx = 0;
    for (std::size_t i = 0; i < homs.size() && !psi_inv; ++i)
        if (auto inv = mat_inverse(homs[i])) {
            psi_inv = std::move(inv);
            psi_idx = i;
        }
    if (!psi_inv)
        return homs;
    const Field& f = x.field();
    const Matrix& psi = homs[psi_idx];
    Echelon ech(f, psi.data().size());
    std::vector<Matrix> out;
    for (auto& h : homs) {
        Matrix e = *psi_inv * h;
        Poly mp = min_poly(e);
        auto r = poly::roots(f, mp);
        if (r.empty() || poly::deg(mp) == 0)
            throw FieldNotSplitting(unsigned(poly::deg(mp)));
        Matrix rad = h - psi.scaled(r[0]);
        if (ech.insert(rad.data()))
            out.push_back(std::move(rad));
    }
    return out;
}

std::vector<Matrix> radical_endos(const AMod& x)
{
    return radical_homs(x, x);
}

}  // namespace tau
