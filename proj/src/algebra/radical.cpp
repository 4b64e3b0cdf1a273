#include "tau/algebra.hpp"

namespace tau {

namespace {

using IntMat = std::vector<std::int64_t>;

IntMat int_mul(const IntMat& a, const IntMat& b, std::size_t n, std::int64_t mod)
{
    IntMat c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::int64_t x = a[i * n + k];
            if (!x)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                c[i * n + j] += x * b[k * n + j];
        }
    for (auto& x : c)
        x %= mod;
    return c;
}

// g_i(x) = Tr(lift(X)^(p^i)) / p^i mod p, for the integer lift of X over F_p.
Scalar g_value(const Matrix& x, unsigned p, unsigned i)
{
    const std::size_t n = x.rows();
    std::int64_t pi = 1;
    for (unsigned k = 0; k < i; ++k)
        pi *= p;
    const std::int64_t mod = pi * p;
    IntMat base(n * n);
    for (std::size_t a = 0; a < n * n; ++a)
        base[a] = x.data()[a];
    IntMat result(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        result[a * n + a] = 1;
    std::int64_t e = pi;
    while (e) {
        if (e & 1)
            result = int_mul(result, base, n, mod);
        e >>= 1;
        if (e)
            base = int_mul(base, base, n, mod);
    }
    std::int64_t tr = 0;
    for (std::size_t a = 0; a < n; ++a)
        tr = (tr + result[a * n + a]) % mod;
    // The trace is divisible by p^i on the relevant ideal; the quotient mod p is g_i.
    return Scalar((tr / pi) % p);
}

Matrix prime_field_radical(const Field& fp, const std::vector<Matrix>& left)
{
    const std::size_t d = left.size();
    const unsigned p = fp.p();
    if (d == 0)
        return Matrix(fp, 0, 0);
    unsigned l = 0;
    for (std::size_t pw = p; pw <= d; pw *= p)
        ++l;
    auto lmat = [&](const Vec& a) {
        Matrix m(fp, d, d);
        for (std::size_t i = 0; i < d; ++i)
            if (a[i])
                m.axpy(a[i], left[i]);
        return m;
    };
    Matrix ideal = Matrix::identity(fp, d);
    for (unsigned i = 0; i <= l && ideal.cols() > 0; ++i) {
        const std::size_t r = ideal.cols();
        std::vector<Matrix> lx(r);
        Vec g(r);
        Echelon ech(fp, d, true);
        for (std::size_t j = 0; j < r; ++j) {
            lx[j] = lmat(ideal.col(j));
            g[j] = g_value(lx[j], p, i);
            ech.insert(ideal.col(j));
        }
        // C[k][j] = g_i(x_j b_k), using linearity of g_i on the current ideal.
        Matrix c(fp, d, r);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Vec prod = lx[j].col(k);
                auto coeffs = ech.express(prod);
                if (!coeffs)
                    throw std::logic_error("radical iteration left the ideal");
                Scalar v = 0;
                for (std::size_t t = 0; t < r; ++t)
                    v = fp.add(v, fp.mul((*coeffs)[t], g[t]));
                c.at(k, j) = v;
            }
        Matrix ns = mat_nullspace(c);
        ideal = ideal * ns;
    }
    return ideal;
}

}  // namespace

Matrix trace_form_radical(const Field& f, const std::vector<Matrix>& left)
{
    if (f.is_prime())
        return prime_field_radical(f, left);
    // Restriction of scalars to F_p: basis alpha^r b_i, alpha the class of x.
    const Field& fp = Field::get(f.p(), 1);
    const std::size_t d = left.size(), m = f.m(), big = d * m;
    auto digits = [&](Scalar a) {
        Vec c(m);
        unsigned x = a;
        for (std::size_t i = 0; i < m; ++i) {
            c[i] = Scalar(x % f.p());
            x /= f.p();
        }
        return c;
    };
    std::vector<Scalar> alpha_pow(2 * m);
    Scalar alpha = Scalar(f.p() % f.q());
    alpha_pow[0] = 1;
    for (std::size_t i = 1; i < alpha_pow.size(); ++i)
        alpha_pow[i] = f.mul(alpha_pow[i - 1], alpha);
    auto expand = [&](const Matrix& a) {
        Matrix out(fp, big, big);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Scalar c = a(i, j);
                if (!c)
                    continue;
                for (std::size_t s = 0; s < m; ++s) {
                    Vec col = digits(f.mul(c, alpha_pow[s]));
                    for (std::size_t r = 0; r < m; ++r)
                        out.at(i * m + r, j * m + s) = col[r];
                }
            }
        return out;
    };
    std::vector<Matrix> lp;
    lp.reserve(big);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t r = 0; r < m; ++r)
            lp.push_back(expand(left[i].scaled(alpha_pow[r])));
    Matrix jp = prime_field_radical(fp, lp);
    Matrix cols(f, d, jp.cols());
    for (std::size_t c = 0; c < jp.cols(); ++c)
        for (std::size_t i = 0; i < d; ++i) {
            Scalar v = 0;
            for (std::size_t r = 0; r < m; ++r)
                v = f.add(v, f.mul(jp(i * m + r, c), alpha_pow[r]));
            cols.at(i, c) = v;
        }
    return jp.cols() ? col_basis(cols) : Matrix(f, d, 0);
}

Matrix algebra_radical(const Algebra& a)
{
    std::vector<Matrix> left;
    for (std::size_t i = 0; i < a.dim(); ++i)
        left.push_back(a.left(i));
    return trace_form_radical(a.field(), left);
}

Matrix matrix_algebra_radical(const std::vector<Matrix>& basis)
{
    if (basis.empty())
        throw std::invalid_argument("empty matrix algebra");
    const Field& f = basis[0].field();
    const std::size_t e = basis.size();
    Echelon ech(f, basis[0].data().size(), true);
    for (auto& b : basis)
        if (!ech.insert(b.data()))
            throw std::invalid_argument("matrix algebra basis is dependent");
    std::vector<Matrix> left(e, Matrix(f, e, e));
    for (std::size_t a = 0; a < e; ++a)
        for (std::size_t b = 0; b < e; ++b) {
            auto c = ech.express((basis[a] * basis[b]).data());
            if (!c)
                throw std::invalid_argument("span is not closed under multiplication");
            left[a].set_col(b, *c);
        }
    return trace_form_radical(f, left);
}

}  // namespace tau
