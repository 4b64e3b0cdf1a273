#include "tau/algebra.hpp"

namespace tau {

namespace {

// J * span(vectors), using the radical in word coordinates.
Matrix radical_of_span(const AMod& m, const std::vector<Vec>& gens)
{
    const Structure& st = m.algebra().structure();
    const Field& f = m.field();
    Echelon ech(f, m.dim());
    std::vector<Vec> cols;
    for (auto& g : gens) {
        Matrix img = m.orbit(g) * st.radical_words;
        for (std::size_t c = 0; c < img.cols(); ++c) {
            Vec v = img.col(c);
            if (ech.insert(v))
                cols.push_back(std::move(v));
        }
        if (ech.rank() == m.dim())
            break;
    }
    Matrix out(f, m.dim(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        out.set_col(c, cols[c]);
    return out;
}

std::vector<Vec> generators_of(const AMod& m)
{
    const SpinData& sd = m.spin();
    std::vector<Vec> out;
    for (auto s : sd.seeds)
        out.push_back(sd.basis.col(s));
    return out;
}

}  // namespace

const Structure& Algebra::structure() const
{
    std::call_once(st_once_, [this] {
        const Field& f = *field_;
        auto st = std::make_unique<Structure>();
        st->radical = algebra_radical(*this);
        st->radical_words = basis_to_word_ * st->radical;
        AMod reg = AMod::regular(*this);
        for (auto& [p, mult] : decompose(reg)) {
            (void)mult;
            const std::size_t n = p.dim();
            std::optional<Matrix> gen_basis;
            for (std::size_t i = 0; i < n && !gen_basis; ++i) {
                Vec e(n, 0);
                e[i] = 1;
                Matrix b = spin_closure(p, Matrix::column(f, e));
                if (b.cols() == n)
                    gen_basis = std::move(b);
            }
            if (!gen_basis)
                throw std::logic_error("projective indecomposable is not cyclic");
            AMod q = restrict_to(p, *gen_basis);
            Vec e0(n, 0);
            e0[0] = 1;
            Matrix rad = col_basis(q.orbit(e0) * st->radical_words);
            AMod s = quotient(q, rad).target;
            std::size_t e = hom_dim(s, s);
            if (e != 1)
                throw FieldNotSplitting(unsigned(e));
            st->pims.push_back(q);
            st->pim_radical.push_back(rad);
            st->simples.push_back(s);
        }
        structure_ = std::move(st);
    });
    return *structure_;
}

std::size_t pim_index(const AMod& p)
{
    const Structure& st = p.algebra().structure();
    for (std::size_t i = 0; i < st.count(); ++i)
        if (is_iso_indecomposable(st.pims[i], p))
            return i;
    return std::size_t(-1);
}

std::vector<std::size_t> composition_vector(const AMod& m)
{
    const Structure& st = m.algebra().structure();
    std::vector<std::size_t> out(st.count(), 0);
    if (m.dim() == 0)
        return out;
    for (std::size_t i = 0; i < st.count(); ++i)
        out[i] = hom_dim(st.pims[i], m);
    return out;
}

std::size_t s_count(const AMod& m)
{
    return decompose(m).size();
}

ModMap radical_mod(const AMod& m)
{
    if (m.dim() == 0)
        return {m, m, Matrix(m.field(), 0, 0)};
    Matrix rad = radical_of_span(m, generators_of(m));
    return {restrict_to(m, rad), m, rad};
}

AMod top(const AMod& m)
{
    if (m.dim() == 0)
        return m;
    return quotient(m, radical_mod(m).matrix).target;
}

ProjectiveCover projective_cover(const AMod& m)
{
    const Algebra& a = m.algebra();
    const Structure& st = a.structure();
    const Field& f = m.field();
    ProjectiveCover pc;
    pc.mult.assign(st.count(), 0);
    if (m.dim() == 0) {
        pc.projective = AMod::zero(a);
        pc.map = Matrix(f, 0, 0);
        return pc;
    }
    Echelon ech(f, m.dim());
    Matrix rad = radical_mod(m).matrix;
    for (std::size_t c = 0; c < rad.cols(); ++c)
        ech.insert(rad.col(c));
    std::vector<AMod> parts;
    std::vector<Matrix> maps;
    for (std::size_t i = 0; i < st.count() && ech.rank() < m.dim(); ++i)
        for (auto& h : hom_basis(st.pims[i], m)) {
            if (ech.contains(h.col(0)))
                continue;
            for (std::size_t c = 0; c < h.cols(); ++c)
                ech.insert(h.col(c));
            parts.push_back(st.pims[i]);
            maps.push_back(h);
            ++pc.mult[i];
            if (ech.rank() == m.dim())
                break;
        }
    pc.projective = direct_sum(a, parts);
    pc.map = hstack(maps, f, m.dim());
    return pc;
}

AMod syzygy(const AMod& m)
{
    auto pc = projective_cover(m);
    return kernel({pc.projective, m, pc.map}).source;
}

AMod dual_module(const AMod& m)
{
    const Algebra& op = m.algebra().opposite();
    std::vector<Matrix> g;
    for (auto& x : m.gens())
        g.push_back(x.transpose());
    if (m.dim() == 0)
        return AMod::zero(op);
    return AMod(op, std::move(g));
}

AMod cosyzygy(const AMod& m)
{
    return dual_module(syzygy(dual_module(m)));
}

bool is_projective(const AMod& m)
{
    return projective_cover(m).projective.dim() == m.dim();
}

Presentation minimal_presentation(const AMod& m)
{
    auto c0 = projective_cover(m);
    ModMap k = kernel({c0.projective, m, c0.map});
    auto c1 = projective_cover(k.source);
    Matrix f1 = k.matrix.cols() && c1.map.cols() ? k.matrix * c1.map
                                                 : Matrix(m.field(), c0.projective.dim(), c1.projective.dim());
    return {c1.projective, c0.projective, f1, c1.mult, c0.mult};
}

std::size_t ext1_dim(const AMod& m, const AMod& n)
{
    if (m.dim() == 0 || n.dim() == 0)
        return 0;
    auto pc = projective_cover(m);
    AMod om = kernel({pc.projective, m, pc.map}).source;
    return hom_dim(om, n) + hom_dim(m, n) - hom_dim(pc.projective, n);
}

AMod tau(const AMod& m)
{
    if (!m.algebra().is_symmetric())
        throw NotSymmetric();
    return syzygy(syzygy(m));
}

AMod tau_inv(const AMod& m)
{
    if (!m.algebra().is_symmetric())
        throw NotSymmetric();
    return cosyzygy(cosyzygy(m));
}

}  // namespace tau
