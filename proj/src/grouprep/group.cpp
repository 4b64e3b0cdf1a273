#include <algorithm>
#include <cctype>
#include <sstream>

#include "tau/grouprep.hpp"

namespace tau {

Perm perm_mul(const Perm& a, const Perm& b)
{
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[b[i]];
    return c;
}

Perm perm_inv(const Perm& a)
{
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        c[a[i]] = int(i);
    return c;
}

Perm perm_identity(std::size_t degree)
{
    Perm p(degree);
    for (std::size_t i = 0; i < degree; ++i)
        p[i] = int(i);
    return p;
}

Perm parse_cycles(const std::string& text, std::size_t degree)
{
    Perm result = perm_identity(degree);
    std::size_t pos = 0;
    while ((pos = text.find('(', pos)) != std::string::npos) {
        std::size_t close = text.find(')', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("unbalanced cycle: " + text);
        std::istringstream is(text.substr(pos + 1, close - pos - 1));
        std::vector<int> pts;
        int x;
        while (is >> x) {
            if (x < 1 || std::size_t(x) > degree)
                throw std::invalid_argument("point out of range in " + text);
            pts.push_back(x - 1);
        }
        Perm c = perm_identity(degree);
        for (std::size_t i = 0; i < pts.size(); ++i)
            c[pts[i]] = pts[(i + 1) % pts.size()];
        // Cycles written left to right compose right to left.
        result = perm_mul(result, c);
        pos = close + 1;
    }
    return result;
}

std::string cycles_to_string(const Perm& p)
{
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == int(i))
            continue;
        out += "(";
        for (std::size_t j = i; !seen[j]; j = std::size_t(p[j])) {
            seen[j] = true;
            out += (j == i ? "" : " ") + std::to_string(j + 1);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

PermGroup::PermGroup(std::vector<Perm> generators) : gens_(std::move(generators))
{
    if (gens_.empty())
        throw std::invalid_argument("group needs at least one generator");
    degree_ = gens_[0].size();
    for (auto& g : gens_) {
        if (g.size() != degree_)
            throw std::invalid_argument("generators of different degrees");
        Perm s = g;
        std::sort(s.begin(), s.end());
        if (s != perm_identity(degree_))
            throw std::invalid_argument("generator is not a permutation");
    }
    Perm id = perm_identity(degree_);
    elements_.push_back(id);
    parent_.push_back(0);
    via_.push_back(std::size_t(-1));
    index_[id] = 0;
    for (std::size_t k = 0; k < elements_.size(); ++k)
        for (std::size_t s = 0; s < gens_.size(); ++s) {
            Perm h = perm_mul(gens_[s], elements_[k]);
            if (index_.emplace(h, elements_.size()).second) {
                elements_.push_back(std::move(h));
                parent_.push_back(k);
                via_.push_back(s);
            }
        }
}

std::size_t PermGroup::index_of(const Perm& p) const
{
    auto it = index_.find(p);
    return it == index_.end() ? std::size_t(-1) : it->second;
}

Perm PermGroup::eval_word(const std::string& word) const
{
    Perm r = perm_identity(degree_);
    for (char c : word) {
        std::size_t s = std::size_t(std::tolower(static_cast<unsigned char>(c)) - 'a');
        if (!std::isalpha(static_cast<unsigned char>(c)) || s >= gens_.size())
            throw std::invalid_argument(std::string("bad word letter ") + c);
        r = perm_mul(r, std::isupper(static_cast<unsigned char>(c)) ? perm_inv(gens_[s]) : gens_[s]);
    }
    return r;
}

std::vector<std::vector<std::size_t>> PermGroup::conjugacy_classes() const
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(order(), false);
    std::vector<Perm> inv;
    for (auto& g : gens_)
        inv.push_back(perm_inv(g));
    for (std::size_t i = 0; i < order(); ++i) {
        if (seen[i])
            continue;
        std::vector<std::size_t> cls{i};
        seen[i] = true;
        for (std::size_t k = 0; k < cls.size(); ++k)
            for (std::size_t s = 0; s < gens_.size(); ++s) {
                std::size_t j = index_of(perm_mul(gens_[s], perm_mul(elements_[cls[k]], inv[s])));
                if (!seen[j]) {
                    seen[j] = true;
                    cls.push_back(j);
                }
            }
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    return out;
}

GroupAlgebra::GroupAlgebra(PermGroup g, const Field& f, std::string n)
    : group(std::move(g)), field(&f), name(std::move(n))
{
    const std::size_t n_el = group.order();
    std::vector<Matrix> left;
    left.reserve(n_el);
    for (std::size_t i = 0; i < n_el; ++i) {
        Matrix l(f, n_el, n_el);
        for (std::size_t j = 0; j < n_el; ++j)
            l.at(group.index_of(perm_mul(group.element(i), group.element(j))), j) = 1;
        left.push_back(std::move(l));
    }
    std::vector<Vec> gens;
    for (auto& p : group.generators()) {
        Vec v(n_el, 0);
        v[group.index_of(p)] = 1;
        gens.push_back(std::move(v));
    }
    Vec unit(n_el, 0);
    unit[0] = 1;
    algebra = std::make_unique<Algebra>(f, std::move(left), unit, std::move(gens), unit, name);
}

Matrix GroupAlgebra::element_matrix(const AMod& u, std::size_t i) const
{
    Matrix m = Matrix::identity(*field, u.dim());
    for (std::size_t k = i; k != 0; k = group.word_parent(k))
        m = m * u.gen(group.word_gen(k));
    return m;
}

std::vector<Matrix> GroupAlgebra::element_matrices(const AMod& u) const
{
    std::vector<Matrix> out(group.order());
    out[0] = Matrix::identity(*field, u.dim());
    for (std::size_t k = 1; k < group.order(); ++k)
        out[k] = u.gen(group.word_gen(k)) * out[group.word_parent(k)];
    return out;
}

AMod trivial_module(const GroupAlgebra& h)
{
    return h.module(std::vector<Matrix>(h.group.generators().size(), Matrix::identity(*h.field, 1)));
}

AMod tensor_modules(const AMod& u, const AMod& v)
{
    if (&u.algebra() != &v.algebra())
        throw std::invalid_argument("tensor product needs modules over the same group algebra");
    std::vector<Matrix> g;
    for (std::size_t s = 0; s < u.gens().size(); ++s)
        g.push_back(mat_kron(u.gen(s), v.gen(s)));
    if (u.dim() * v.dim() == 0)
        return AMod::zero(u.algebra());
    return AMod(u.algebra(), std::move(g));
}

bool is_group_module(const GroupAlgebra& h, const AMod& u)
{
    if (&u.algebra() != h.algebra.get())
        return false;
    for (auto& g : u.gens())
        if (!mat_inverse(g))
            return false;
    return u.check_relations();
}

}  // namespace tau
