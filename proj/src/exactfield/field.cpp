#include "tau/exactfield.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace tau {

bool is_prime(unsigned n)
{
    if (n < 2)
        return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace {

std::vector<unsigned> prime_divisors(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

// Raw arithmetic on digit vectors modulo a monic polynomial over F_p; used only
// while building the tables.
struct RawExt {
    unsigned p, m;
    std::vector<unsigned> poly;  // monic, size m+1

    std::vector<unsigned> decode(unsigned a) const
    {
        std::vector<unsigned> c(m);
        for (unsigned i = 0; i < m; ++i) {
            c[i] = a % p;
            a /= p;
        }
        return c;
    }
    unsigned encode(const std::vector<unsigned>& c) const
    {
        unsigned a = 0;
        for (unsigned i = m; i-- > 0;)
            a = a * p + c[i];
        return a;
    }
    unsigned mul(unsigned a, unsigned b) const
    {
        auto x = decode(a), y = decode(b);
        std::vector<unsigned> r(2 * m, 0);
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j)
                r[i + j] = (r[i + j] + x[i] * y[j]) % p;
        for (unsigned k = 2 * m - 1; k >= m; --k) {
            unsigned c = r[k];
            if (c == 0)
                continue;
            for (unsigned i = 0; i <= m; ++i)
                r[k - m + i] = (r[k - m + i] + (p - c) * poly[i]) % p;
        }
        r.resize(m);
        return encode(r);
    }
};

std::vector<unsigned> find_irreducible(unsigned p, unsigned m)
{
    const Field& fp = Field::get(p, 1);
    unsigned total = 1;
    for (unsigned i = 0; i < m; ++i)
        total *= p;
    for (unsigned code = 0; code < total; ++code) {
        Poly cand(m + 1);
        unsigned c = code;
        for (unsigned i = 0; i < m; ++i) {
            cand[i] = Scalar(c % p);
            c /= p;
        }
        cand[m] = 1;
        if (cand[0] == 0)
            continue;
        if (poly::is_irreducible(fp, cand))
            return std::vector<unsigned>(cand.begin(), cand.end());
    }
    throw std::logic_error("no irreducible polynomial found");
}

}  // namespace

Field::Field(unsigned p, unsigned m) : p_(p), m_(m), q_(1)
{
    if (!tau::is_prime(p))
        throw std::invalid_argument("field characteristic must be prime");
    if (m < 1)
        throw std::invalid_argument("extension degree must be at least 1");
    for (unsigned i = 0; i < m; ++i)
        q_ *= p;
    if (q_ > 65536)
        throw std::invalid_argument("field too large for 16-bit scalars");

    RawExt raw{p, m, {}};
    if (m == 1)
        poly_ = {0, 1};
    else
        poly_ = find_irreducible(p, m);
    raw.poly = poly_;

    neg_.resize(q_);
    for (unsigned a = 0; a < q_; ++a) {
        auto c = raw.decode(a);
        for (auto& x : c)
            x = (p - x) % p;
        neg_[a] = Scalar(raw.encode(c));
    }
    if (m > 1 && q_ <= 2048) {
        std::vector<Scalar> table(std::size_t(q_) * q_);
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b)
                table[std::size_t(a) * q_ + b] = add_digits(Scalar(a), Scalar(b));
        add_table_ = std::move(table);
    }

    auto mulraw = [&](unsigned a, unsigned b) -> unsigned {
        if (m == 1)
            return (a * b) % p;
        return raw.mul(a, b);
    };
    auto powraw = [&](unsigned a, unsigned e) {
        unsigned r = 1;
        while (e) {
            if (e & 1)
                r = mulraw(r, a);
            a = mulraw(a, a);
            e >>= 1;
        }
        return r;
    };
    unsigned gen = 1;
    if (q_ > 2) {
        auto divs = prime_divisors(q_ - 1);
        for (unsigned g = 2; g < q_; ++g) {
            bool ok = true;
            for (unsigned r : divs)
                if (powraw(g, (q_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                gen = g;
                break;
            }
        }
    }
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    unsigned x = 1;
    for (unsigned i = 0; i + 1 < q_; ++i) {
        exp_[i] = Scalar(x);
        log_[x] = Scalar(i);
        x = mulraw(x, gen);
    }
}

Scalar Field::add_digits(Scalar a, Scalar b) const
{
    if (!add_table_.empty())
        return add_table_[std::size_t(a) * q_ + b];
    unsigned r = 0, scale = 1, x = a, y = b;
    for (unsigned i = 0; i < m_; ++i) {
        r += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return Scalar(r);
}

const Field& Field::get(unsigned p, unsigned m)
{
    static std::recursive_mutex mu;
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Field>> registry;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto key = std::make_pair(p, m);
    auto it = registry.find(key);
    if (it != registry.end())
        return *it->second;
    auto f = std::make_unique<Field>(p, m);
    auto& ref = *f;
    registry.emplace(key, std::move(f));
    return ref;
}

Scalar Field::inv(Scalar a) const
{
    if (a == 0)
        throw std::domain_error("inverse of zero");
    unsigned l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Scalar Field::pow(Scalar a, std::uint64_t e) const
{
    if (e == 0)
        return 1;
    if (a == 0)
        return 0;
    std::uint64_t l = (std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[l];
}

Scalar Field::from_int(long long v) const
{
    long long r = v % static_cast<long long>(p_);
    if (r < 0)
        r += p_;
    return Scalar(r);
}

unsigned Field::order(Scalar a) const
{
    if (a == 0)
        throw std::domain_error("order of zero");
    unsigned n = q_ - 1;
    unsigned l = log_[a];
    unsigned g = n, b = l;
    while (b) {
        unsigned t = g % b;
        g = b;
        b = t;
    }
    return n / g;
}

std::string Field::to_string(Scalar a) const
{
    if (m_ == 1)
        return std::to_string(a);
    std::string s = "[";
    unsigned x = a;
    for (unsigned i = 0; i < m_; ++i) {
        if (i)
            s += ",";
        s += std::to_string(x % p_);
        x /= p_;
    }
    return s + "]";
}

}  // namespace tau
