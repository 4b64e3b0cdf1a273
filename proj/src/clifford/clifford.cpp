#include <algorithm>
#include <numeric>

#include "tau/clifford.hpp"

namespace tau {

std::string to_string(QuotientKind k)
{
    switch (k) {
    case QuotientKind::PGroup:
        return "p-group";
    case QuotientKind::Cyclic:
        return "cyclic";
    case QuotientKind::Dihedral2p:
        return "dihedral-2p";
    default:
        return "other";
    }
}

QuotientKind quotient_kind_from_string(const std::string& s)
{
    if (s == "p-group")
        return QuotientKind::PGroup;
    if (s == "cyclic")
        return QuotientKind::Cyclic;
    if (s == "dihedral-2p")
        return QuotientKind::Dihedral2p;
    if (s == "other")
        return QuotientKind::Other;
    throw std::invalid_argument("unknown quotient kind " + s);
}

namespace {

// Left multiplication of G~ generator x on the cosets.
Perm coset_action(const NormalPair& np, const Perm& x)
{
    const PermGroup& T = np.gt->group;
    Perm out(np.index());
    for (std::size_t c = 0; c < np.index(); ++c)
        out[c] = int(np.coset_of[T.index_of(perm_mul(x, T.element(np.cosets[c])))]);
    return out;
}

// Q element (as index into q.group) for each coset; Q acts regularly.
std::vector<std::size_t> quotient_index_of_coset(const QuotientGroup& q)
{
    std::vector<std::size_t> out(q.order());
    for (std::size_t i = 0; i < q.order(); ++i)
        out[std::size_t(q.group.element(i)[0])] = i;
    return out;
}

std::size_t element_order(const Perm& p)
{
    Perm id = perm_identity(p.size()), x = p;
    std::size_t n = 1;
    while (x != id) {
        x = perm_mul(p, x);
        ++n;
    }
    return n;
}

bool is_prime_power(std::size_t n, unsigned p)
{
    while (n % p == 0)
        n /= p;
    return n == 1;
}

bool quotient_is_cyclic(const QuotientGroup& q)
{
    for (auto& x : q.group.elements())
        if (element_order(x) == q.order())
            return true;
    return false;
}

bool quotient_is_dihedral_2p(const QuotientGroup& q, unsigned p)
{
    if (p == 2 || q.order() != 2 * p)
        return false;
    std::size_t involutions = 0, order_p = 0;
    for (auto& x : q.group.elements()) {
        std::size_t o = element_order(x);
        involutions += o == 2;
        order_p += o == p;
    }
    return involutions == p && order_p == p - 1;
}

// Smallest d with beta an n-th power in F_{q^d}, up to a cap.
unsigned root_degree(const Field& f, Scalar beta, std::size_t n)
{
    const std::uint64_t o = f.order(beta);
    std::uint64_t qd = 1;
    for (unsigned d = 1; d <= 12; ++d) {
        qd *= f.q();
        std::uint64_t big = qd - 1;
        if ((big / std::gcd<std::uint64_t>(n, big)) % o == 0)
            return d;
    }
    return 0;
}

Scalar ratio(const Matrix& a, const Matrix& b)
{
    const Field& f = a.field();
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(i, j)) {
                Scalar c = f.div(a(i, j), b(i, j));
                if (b.scaled(c) != a)
                    throw std::logic_error("intertwiners are not proportional");
                return c;
            }
    throw std::logic_error("zero intertwiner");
}

}  // namespace

QuotientGroup quotient_group(const NormalPair& np)
{
    std::vector<Perm> gens;
    for (auto& x : np.gt->group.generators())
        gens.push_back(coset_action(np, x));
    return {PermGroup(std::move(gens))};
}

QuotientKind compute_quotient_kind(const NormalPair& np)
{
    QuotientGroup q = quotient_group(np);
    const unsigned p = np.g->field->p();
    if (is_prime_power(q.order(), p))
        return QuotientKind::PGroup;
    if (quotient_is_cyclic(q))
        return QuotientKind::Cyclic;
    if (quotient_is_dihedral_2p(q, p))
        return QuotientKind::Dihedral2p;
    return QuotientKind::Other;
}

bool kind_compatible(QuotientKind k, const NormalPair& np)
{
    QuotientGroup q = quotient_group(np);
    const unsigned p = np.g->field->p();
    switch (k) {
    case QuotientKind::PGroup:
        return is_prime_power(q.order(), p);
    case QuotientKind::Cyclic:
        return quotient_is_cyclic(q);
    case QuotientKind::Dihedral2p:
        return quotient_is_dihedral_2p(q, p);
    default:
        return true;
    }
}

std::vector<std::size_t> covering_blocks(const std::vector<BlockIdem>& tilde_blocks, const BlockIdem& b,
                                         const NormalPair& np)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < tilde_blocks.size(); ++i)
        if (covers(tilde_blocks[i], b, np))
            out.push_back(i);
    return out;
}

bool is_stable(const AMod& u, const NormalPair& np)
{
    const PermGroup& T = np.gt->group;
    for (auto& x : T.generators()) {
        std::size_t xi = T.index_of(x);
        if (np.coset_of[xi] == 0)
            continue;
        if (!is_iso(conjugate_module(xi, u, np), u))
            return false;
    }
    return true;
}

std::vector<std::vector<Scalar>> linear_characters(const NormalPair& np)
{
    const Field& f = *np.g->field;
    QuotientGroup q = quotient_group(np);
    const PermGroup& Q = q.group;
    const std::size_t ng = Q.generators().size(), n = Q.order();
    std::vector<std::size_t> qidx = quotient_index_of_coset(q);
    std::vector<std::vector<Scalar>> out;
    std::vector<std::size_t> digits(ng, 0);
    const std::size_t units = f.q() - 1;
    while (true) {
        std::vector<Scalar> lam(ng);
        for (std::size_t s = 0; s < ng; ++s)
            lam[s] = f.pow(f.primitive(), digits[s]);
        std::vector<Scalar> val(n);
        val[0] = 1;
        for (std::size_t k = 1; k < n; ++k)
            val[k] = f.mul(lam[Q.word_gen(k)], val[Q.word_parent(k)]);
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k)
            for (std::size_t s = 0; s < ng && ok; ++s)
                ok = val[Q.index_of(perm_mul(Q.generators()[s], Q.element(k)))] == f.mul(lam[s], val[k]);
        if (ok) {
            std::vector<Scalar> chi(np.gt->group.order());
            for (std::size_t k = 0; k < chi.size(); ++k)
                chi[k] = val[qidx[np.coset_of[k]]];
            out.push_back(std::move(chi));
        }
        std::size_t s = 0;
        while (s < ng && ++digits[s] == units)
            digits[s++] = 0;
        if (s == ng)
            break;
    }
    return out;
}

std::size_t extension_count_e(const NormalPair& np) { return linear_characters(np).size(); }

std::size_t quotient_simple_count(const NormalPair& np)
{
    GroupAlgebra kq(quotient_group(np).group, *np.g->field, "kQ");
    return kq.algebra->structure().count();
}

bool quotient_algebra_basic(const NormalPair& np)
{
    GroupAlgebra kq(quotient_group(np).group, *np.g->field, "kQ");
    for (auto& s : kq.algebra->structure().simples)
        if (s.dim() != 1)
            return false;
    return true;
}

std::vector<AMod> extending_modules(const AMod& s, const NormalPair& np)
{
    const Field& f = *np.g->field;
    const PermGroup& T = np.gt->group;
    const PermGroup& G = np.g->group;
    const std::size_t n = np.index(), d = s.dim();
    if (d == 0)
        throw ZeroModule();

    // Coset generators: G~ generators whose cosets are not yet reached.
    std::vector<std::size_t> xs;
    {
        std::vector<bool> reached(n, false);
        reached[0] = true;
        auto close = [&] {
            std::vector<std::size_t> todo{0};
            std::fill(reached.begin(), reached.end(), false);
            reached[0] = true;
            while (!todo.empty()) {
                std::size_t c = todo.back();
                todo.pop_back();
                for (auto x : xs) {
                    std::size_t c2 = np.coset_of[T.index_of(perm_mul(T.element(x), T.element(np.cosets[c])))];
                    if (!reached[c2]) {
                        reached[c2] = true;
                        todo.push_back(c2);
                    }
                }
            }
        };
        for (auto& x : T.generators()) {
            std::size_t xi = T.index_of(x);
            if (reached[np.coset_of[xi]])
                continue;
            xs.push_back(xi);
            close();
        }
    }
    if (xs.size() > 2)
        throw UnsupportedQuotient("quotient needs " + std::to_string(xs.size()) + " coset generators");
    const std::size_t k = xs.size();

    std::vector<Matrix> rho = np.g->element_matrices(s);
    std::vector<Matrix> phi;
    for (auto x : xs) {
        std::size_t xinv = T.index_of(perm_inv(T.element(x)));
        auto hb = hom_basis(s, conjugate_module(xinv, s, np));
        if (hb.size() != 1 || !mat_inverse(hb[0]))
            throw HypothesisFailed("module is not a stable brick");
        phi.push_back(hb[0]);
    }

    // Coset representatives r_q as words in the coset generators, with the
    // matching products of intertwiners and exponent vectors.
    std::vector<Perm> r(n);
    std::vector<Matrix> pm(n);
    std::vector<std::vector<unsigned>> ex(n, std::vector<unsigned>(k, 0));
    std::vector<bool> seen(n, false);
    r[0] = perm_identity(T.degree());
    pm[0] = Matrix::identity(f, d);
    seen[0] = true;
    std::vector<std::size_t> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::size_t c = queue[qi];
        for (std::size_t z = 0; z < k; ++z) {
            Perm y = perm_mul(T.element(xs[z]), r[c]);
            std::size_t c2 = np.coset_of[T.index_of(y)];
            if (seen[c2])
                continue;
            seen[c2] = true;
            r[c2] = y;
            pm[c2] = phi[z] * pm[c];
            ex[c2] = ex[c];
            ++ex[c2][z];
            queue.push_back(c2);
        }
    }
    auto g_part = [&](std::size_t c, const Perm& y) {
        std::size_t h = G.index_of(perm_mul(perm_inv(r[c]), y));
        if (h == std::size_t(-1))
            throw std::logic_error("element not in the expected coset");
        return h;
    };

    // Relations c * lambda_z * lambda^{e_q} = lambda^{e_q''}.
    struct Relation {
        Scalar c;
        std::size_t z;
        std::vector<unsigned> lhs, rhs;
    };
    std::vector<Relation> rels;
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t z = 0; z < k; ++z) {
            Perm y = perm_mul(T.element(xs[z]), r[c]);
            std::size_t c2 = np.coset_of[T.index_of(y)];
            Matrix lhs = phi[z] * pm[c];
            Matrix rhs = pm[c2] * rho[g_part(c2, y)];
            rels.push_back({ratio(lhs, rhs), z, ex[c], ex[c2]});
        }
    auto mono = [&](const std::vector<Scalar>& lam, const std::vector<unsigned>& e) {
        Scalar v = 1;
        for (std::size_t z = 0; z < k; ++z)
            v = f.mul(v, f.pow(lam[z], e[z]));
        return v;
    };

    std::vector<std::vector<Scalar>> sols;
    std::vector<std::size_t> digits(k, 0);
    const std::size_t units = f.q() - 1;
    while (true) {
        std::vector<Scalar> lam(k);
        for (std::size_t z = 0; z < k; ++z)
            lam[z] = f.pow(f.primitive(), digits[z]);
        bool ok = true;
        for (auto& rel : rels)
            if (f.mul(f.mul(rel.c, lam[rel.z]), mono(lam, rel.lhs)) != mono(lam, rel.rhs)) {
                ok = false;
                break;
            }
        if (ok)
            sols.push_back(lam);
        std::size_t z = 0;
        while (z < k && ++digits[z] == units)
            digits[z++] = 0;
        if (z == k)
            break;
    }

    if (sols.empty()) {
        // Each power relation lambda_z^n = beta_z must be solvable.
        unsigned deg = 1;
        for (std::size_t z = 0; z < k; ++z) {
            std::size_t o = 1;
            Perm y = T.element(xs[z]);
            while (np.coset_of[T.index_of(y)] != 0) {
                y = perm_mul(T.element(xs[z]), y);
                ++o;
            }
            Matrix pw = mat_pow(phi[z], o);
            Scalar beta = ratio(rho[G.index_of(y)], pw);
            unsigned dz = root_degree(f, beta, o);
            if (dz == 0)
                throw HypothesisFailed("no extension within the field degrees tried");
            deg = std::lcm(deg, dz);
        }
        if (deg == 1)
            throw HypothesisFailed("module does not extend; the obstruction is cohomological");
        throw FieldTooSmall(deg);
    }

    std::vector<AMod> out;
    for (auto& lam : sols) {
        std::vector<Matrix> gens;
        for (auto& t : T.generators()) {
            std::size_t c = np.coset_of[T.index_of(t)];
            gens.push_back((pm[c] * rho[g_part(c, t)]).scaled(mono(lam, ex[c])));
        }
        out.push_back(np.gt->module(std::move(gens)));
    }
    return out;
}

bool inertia_is_whole(const CoveringPair& pair)
{
    const NormalPair& np = *pair.np;
    return inertia_of_block(*pair.b, np).size() == np.g->group.generators().size() + np.index() - 1;
}

namespace {

void add_distinct(std::vector<AMod>& parts, const AMod& m)
{
    for (auto& x : parts)
        if (x.dim() == m.dim() && is_iso_indecomposable(x, m))
            return;
    parts.push_back(m);
}

}  // namespace

AMod ind_block(const AMod& m, const CoveringPair& pair)
{
    const NormalPair& np = *pair.np;
    return block_cut(*pair.btilde, induce_module(inflate_block_module(*np.g, m), np));
}

STiltPair ind_stau(const STiltPair& x, const CoveringPair& pair)
{
    if (!inertia_is_whole(pair))
        throw HypothesisFailed("inertia group of the block is not the whole overgroup");
    STiltPair out;
    for (auto& part : x.m_parts)
        for (auto& [s, mult] : decompose(ind_block(part, pair)))
            add_distinct(out.m_parts, s);
    for (auto& part : x.p_parts)
        for (auto& [s, mult] : decompose(ind_block(part, pair)))
            add_distinct(out.p_parts, s);
    if (out.m_parts.empty() && out.p_parts.empty())
        throw HypothesisFailed("induced pair is zero");
    if (!is_valid_pair(out))
        throw HypothesisFailed("induced pair is not support tau-tilting");
    return out;
}

Semibrick ind_semibrick(const Semibrick& s, const CoveringPair& pair)
{
    const NormalPair& np = *pair.np;
    Semibrick out;
    for (auto& brick : s)
        for (auto& ext : extending_modules(inflate_block_module(*np.g, brick), np)) {
            AMod cut = block_cut(*pair.btilde, ext);
            if (cut.dim())
                add_distinct(out, cut);
        }
    return out;
}

std::vector<std::vector<long>> induced_pim_matrix(const CoveringPair& pair)
{
    const auto& pims = pair.b->algebra->structure().pims;
    const std::size_t nt = pair.btilde->algebra->structure().count();
    std::vector<std::vector<long>> d(nt, std::vector<long>(pims.size(), 0));
    for (std::size_t i = 0; i < pims.size(); ++i)
        for (auto& [s, mult] : decompose(ind_block(pims[i], pair)))
            d[pim_index(s)][i] += long(mult);
    return d;
}

bool same_semibrick(const Semibrick& a, const Semibrick& b)
{
    if (a.size() != b.size())
        return false;
    std::vector<bool> used(b.size(), false);
    for (auto& x : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size() && !found; ++j)
            if (!used[j] && b[j].dim() == x.dim() && is_iso_indecomposable(x, b[j]))
                used[j] = found = true;
        if (!found)
            return false;
    }
    return true;
}

}  // namespace tau
