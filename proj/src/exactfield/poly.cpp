#include "tau/exactfield.hpp"

#include <algorithm>

namespace tau {
namespace poly {

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

std::size_t deg(const Poly& a)
{
    return a.empty() ? 0 : a.size() - 1;
}

bool is_zero(const Poly& a)
{
    return a.empty();
}

Poly add(const Field& f, const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

Poly sub(const Field& f, const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

Poly mul(const Field& f, const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i])
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

void divmod(const Field& f, const Poly& a, const Poly& b, Poly& quo, Poly& rem)
{
    if (b.empty())
        throw std::domain_error("polynomial division by zero");
    rem = a;
    trim(rem);
    if (rem.size() < b.size()) {
        quo.clear();
        return;
    }
    quo.assign(rem.size() - b.size() + 1, 0);
    Scalar lead_inv = f.inv(b.back());
    for (std::size_t s = rem.size() - b.size() + 1; s-- > 0;) {
        Scalar c = f.mul(rem[s + b.size() - 1], lead_inv);
        quo[s] = c;
        if (!c)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            rem[s + j] = f.sub(rem[s + j], f.mul(c, b[j]));
    }
    trim(rem);
    trim(quo);
}

Poly mod(const Field& f, const Poly& a, const Poly& b)
{
    Poly q, r;
    divmod(f, a, b, q, r);
    return r;
}

Poly monic(const Field& f, const Poly& a)
{
    if (a.empty())
        return a;
    Poly r = a;
    Scalar s = f.inv(a.back());
    for (auto& x : r)
        x = f.mul(x, s);
    return r;
}

Poly gcd(const Field& f, Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(f, a);
}

Poly inverse_mod(const Field& f, const Poly& a, const Poly& m)
{
    // Extended Euclid tracking only the coefficient of a.
    Poly r0 = m, r1 = mod(f, a, m);
    Poly s0, s1 = {1};
    while (!r1.empty()) {
        Poly q, r;
        divmod(f, r0, r1, q, r);
        Poly s = sub(f, s0, mul(f, q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1)
        throw std::domain_error("polynomial not invertible modulo m");
    Scalar c = f.inv(r0[0]);
    for (auto& x : s0)
        x = f.mul(x, c);
    return mod(f, s0, m);
}

Poly powmod(const Field& f, const Poly& a, std::uint64_t e, const Poly& m)
{
    Poly result = {1};
    result = mod(f, result, m);
    Poly base = mod(f, a, m);
    while (e) {
        if (e & 1)
            result = mod(f, mul(f, result, base), m);
        e >>= 1;
        if (e)
            base = mod(f, mul(f, base, base), m);
    }
    return result;
}

Poly derivative(const Field& f, const Poly& a)
{
    if (a.size() <= 1)
        return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = f.mul(f.from_int(static_cast<long long>(i % f.p())), a[i]);
    trim(r);
    return r;
}

Scalar eval(const Field& f, const Poly& a, Scalar x)
{
    Scalar r = 0;
    for (std::size_t i = a.size(); i-- > 0;)
        r = f.add(f.mul(r, x), a[i]);
    return r;
}

Matrix eval(const Poly& a, const Matrix& x)
{
    const Field& f = x.field();
    Matrix r(f, x.rows(), x.cols());
    for (std::size_t i = a.size(); i-- > 0;) {
        r = r * x;
        for (std::size_t d = 0; d < x.rows(); ++d)
            r.at(d, d) = f.add(r(d, d), a[i]);
    }
    return r;
}

std::vector<Scalar> roots(const Field& f, const Poly& a)
{
    std::vector<Scalar> out;
    if (a.size() <= 1)
        return out;
    for (unsigned x = 0; x < f.q(); ++x)
        if (eval(f, a, Scalar(x)) == 0)
            out.push_back(Scalar(x));
    return out;
}

namespace {

Poly exact_div(const Field& f, const Poly& a, const Poly& b)
{
    Poly q, r;
    divmod(f, a, b, q, r);
    return q;
}

// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Field& f, const Poly& a)
{
    const unsigned p = f.p();
    // Frobenius inverse on F_q is x -> x^(q/p).
    const std::uint64_t e = f.q() / p;
    Poly r((a.size() - 1) / p + 1, 0);
    for (std::size_t i = 0; i < a.size(); i += p)
        r[i / p] = f.pow(a[i], e);
    trim(r);
    return r;
}

void squarefree(const Field& f, const Poly& a, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out)
{
    if (deg(a) == 0)
        return;
    Poly da = derivative(f, a);
    if (da.empty()) {
        squarefree(f, pth_root(f, a), mult * f.p(), out);
        return;
    }
    Poly c = gcd(f, a, da);
    Poly w = exact_div(f, a, c);
    unsigned i = 1;
    while (deg(w) > 0) {
        Poly y = gcd(f, w, c);
        Poly z = exact_div(f, w, y);
        if (deg(z) > 0)
            out.emplace_back(monic(f, z), i * mult);
        ++i;
        w = y;
        c = exact_div(f, c, y);
    }
    c = monic(f, c);
    if (deg(c) > 0)
        squarefree(f, pth_root(f, c), mult * f.p(), out);
}

}  // namespace

std::vector<Factor> coprime_factors(const Field& f, const Poly& a)
{
    std::vector<Factor> out;
    std::vector<std::pair<Poly, unsigned>> parts;
    squarefree(f, monic(f, a), 1, parts);
    const Poly x = {0, 1};
    for (auto& [z0, mult] : parts) {
        Poly z = z0;
        Poly h = x;
        for (unsigned d = 1; deg(z) >= 2 * d; ++d) {
            h = powmod(f, h, f.q(), z);
            Poly g = gcd(f, sub(f, h, x), z);
            if (deg(g) > 0) {
                if (d == 1) {
                    for (Scalar r : roots(f, g))
                        out.push_back({Poly{f.neg(r), 1}, 1, mult});
                } else {
                    out.push_back({g, d, mult});
                }
                z = exact_div(f, z, g);
                h = mod(f, h, z);
            }
        }
        if (deg(z) > 0) {
            if (deg(z) == 1)
                out.push_back({monic(f, z), 1, mult});
            else
                out.push_back({monic(f, z), unsigned(deg(z)), mult});
        }
    }
    return out;
}

bool is_irreducible(const Field& f, const Poly& a0)
{
    Poly a = a0;
    trim(a);
    const std::size_t n = deg(a);
    if (n == 0)
        return false;
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < d; ++i)
            total *= f.q();
        for (std::size_t code = 0; code < total; ++code) {
            Poly cand(d + 1);
            std::size_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                cand[i] = Scalar(c % f.q());
                c /= f.q();
            }
            cand[d] = 1;
            if (mod(f, a, cand).empty())
                return false;
        }
    }
    return true;
}

}  // namespace poly

Poly min_poly(const Matrix& a)
{
    const Field& f = a.field();
    const std::size_t n = a.rows();
    if (n == 0)
        return {1};
    Echelon ech(f, n * n, true);
    Matrix power = Matrix::identity(f, n);
    for (std::size_t k = 0;; ++k) {
        auto coeffs = ech.express(power.data());
        if (coeffs) {
            Poly m(k + 1, 0);
            for (std::size_t i = 0; i < k; ++i)
                m[i] = f.neg((*coeffs)[i]);
            m[k] = 1;
            return m;
        }
        ech.insert(power.data());
        power = power * a;
    }
}

}  // namespace tau
