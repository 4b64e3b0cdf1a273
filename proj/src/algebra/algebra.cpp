#include "tau/algebra.hpp"

namespace tau {

Algebra::Algebra(const Field& f, std::vector<Matrix> left_regular, Vec unit, std::vector<Vec> generators,
                 std::optional<Vec> symmetric_form, std::string name)
    : field_(&f),
      dim_(left_regular.size()),
      left_(std::move(left_regular)),
      unit_(std::move(unit)),
      gens_(std::move(generators)),
      form_(std::move(symmetric_form)),
      name_(std::move(name))
{
    for (auto& l : left_)
        if (l.rows() != dim_ || l.cols() != dim_)
            throw std::invalid_argument("left-regular matrix has wrong shape");
    if (unit_.size() != dim_)
        throw std::invalid_argument("unit has wrong length");
    for (auto& g : gens_)
        if (g.size() != dim_)
            throw std::invalid_argument("generator has wrong length");
    if (!left_matrix(unit_).is_identity())
        throw std::invalid_argument("unit is not a left identity");
    for (std::size_t i = 0; i < dim_; ++i)
        if (left_[i].apply(unit_) != basis_vector(i))
            throw std::invalid_argument("unit is not a right identity");
    if (form_) {
        if (form_->size() != dim_)
            throw std::invalid_argument("symmetric form has wrong length");
        Matrix g = gram();
        if (g != g.transpose() || !mat_inverse(g))
            throw std::invalid_argument("form is not symmetric and nondegenerate");
    }
    for (auto& g : gens_)
        gen_left_.push_back(left_matrix(g));
    build_words();
}

Algebra::~Algebra() = default;

void Algebra::build_words()
{
    const Field& f = *field_;
    Echelon ech(f, dim_);
    std::vector<Vec> words;
    ech.insert(unit_);
    words.push_back(unit_);
    word_parent_.push_back(0);
    word_gen_.push_back(std::size_t(-1));
    for (std::size_t k = 0; k < words.size() && words.size() < dim_; ++k) {
        for (std::size_t s = 0; s < gens_.size(); ++s) {
            Vec w = gen_left_[s].apply(words[k]);
            if (ech.insert(w)) {
                words.push_back(std::move(w));
                word_parent_.push_back(k);
                word_gen_.push_back(s);
            }
        }
    }
    if (words.size() != dim_)
        throw std::invalid_argument("generators do not generate the algebra");
    Matrix w(f, dim_, dim_);
    for (std::size_t k = 0; k < dim_; ++k)
        w.set_col(k, words[k]);
    basis_to_word_ = *mat_inverse(w);
}

Vec Algebra::basis_vector(std::size_t i) const
{
    Vec v(dim_, 0);
    v[i] = 1;
    return v;
}

Vec Algebra::mul(const Vec& a, const Vec& b) const
{
    return left_matrix(a).apply(b);
}

Matrix Algebra::left_matrix(const Vec& a) const
{
    Matrix m(*field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (a[i])
            m.axpy(a[i], left_[i]);
    return m;
}

Matrix Algebra::gram() const
{
    if (!form_)
        throw NotSymmetric();
    const Field& f = *field_;
    Matrix g(f, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            Scalar s = 0;
            for (std::size_t k = 0; k < dim_; ++k)
                s = f.add(s, f.mul(left_[i](k, j), (*form_)[k]));
            g.at(i, j) = s;
        }
    return g;
}

bool Algebra::check_associative() const
{
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            // L(b_i b_j) = L_i L_j
            Vec bij = left_[i].apply(basis_vector(j));
            if (left_matrix(bij) != left_[i] * left_[j])
                return false;
        }
    return true;
}

const Algebra& Algebra::opposite() const
{
    std::call_once(op_once_, [this] {
        if (op_)
            return;
        std::vector<Matrix> l(dim_, Matrix(*field_, dim_, dim_));
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    l[i].at(k, j) = left_[j](k, i);
        std::string n = name_.empty() ? "" : name_ + "^op";
        op_owned_ = std::make_unique<Algebra>(*field_, std::move(l), unit_, gens_, form_, n);
        op_owned_->op_ = this;
        std::call_once(op_owned_->op_once_, [] {});
        op_ = op_owned_.get();
    });
    return *op_;
}

Matrix Algebra::radical() const
{
    return structure().radical;
}

AMod::AMod(const Algebra& a, std::vector<Matrix> gen_action)
{
    if (gen_action.size() != a.num_generators())
        throw std::invalid_argument("one action matrix per generator required");
    std::size_t n = gen_action.empty() ? 0 : gen_action[0].rows();
    for (auto& g : gen_action)
        if (g.rows() != n || g.cols() != n)
            throw std::invalid_argument("action matrices must be square of equal size");
    data_ = std::make_shared<Data>();
    data_->alg = &a;
    data_->dim = n;
    data_->gens = std::move(gen_action);
}

AMod AMod::zero(const Algebra& a)
{
    return AMod(a, std::vector<Matrix>(a.num_generators(), Matrix(a.field(), 0, 0)));
}

AMod AMod::regular(const Algebra& a)
{
    std::vector<Matrix> g;
    for (std::size_t s = 0; s < a.num_generators(); ++s)
        g.push_back(a.gen_left(s));
    return AMod(a, std::move(g));
}

Matrix AMod::orbit(const Vec& v) const
{
    const Algebra& a = algebra();
    Matrix o(field(), dim(), a.dim());
    std::vector<Vec> cols(a.dim());
    cols[0] = v;
    for (std::size_t k = 1; k < a.dim(); ++k)
        cols[k] = gen(a.word_gen(k)).apply(cols[a.word_parent(k)]);
    for (std::size_t k = 0; k < a.dim(); ++k)
        o.set_col(k, cols[k]);
    return o;
}

Vec AMod::act_on(const Vec& a, const Vec& v) const
{
    return orbit(v).apply(algebra().to_word_coords(a));
}

Matrix AMod::act(const Vec& a) const
{
    const Algebra& alg = algebra();
    Vec c = alg.to_word_coords(a);
    std::vector<Matrix> w(alg.dim());
    w[0] = Matrix::identity(field(), dim());
    Matrix out(field(), dim(), dim());
    out.axpy(c[0], w[0]);
    for (std::size_t k = 1; k < alg.dim(); ++k) {
        w[k] = gen(alg.word_gen(k)) * w[alg.word_parent(k)];
        out.axpy(c[k], w[k]);
    }
    return out;
}

bool AMod::check_relations() const
{
    const Algebra& alg = algebra();
    std::vector<Matrix> w(alg.dim());
    w[0] = Matrix::identity(field(), dim());
    for (std::size_t k = 1; k < alg.dim(); ++k)
        w[k] = gen(alg.word_gen(k)) * w[alg.word_parent(k)];
    auto rho = [&](const Vec& a) {
        Vec c = alg.to_word_coords(a);
        Matrix out(field(), dim(), dim());
        for (std::size_t k = 0; k < alg.dim(); ++k)
            out.axpy(c[k], w[k]);
        return out;
    };
    // Word basis elements in algebra coordinates.
    std::vector<Vec> words(alg.dim());
    words[0] = alg.unit();
    for (std::size_t k = 1; k < alg.dim(); ++k)
        words[k] = alg.gen_left(alg.word_gen(k)).apply(words[alg.word_parent(k)]);
    for (std::size_t s = 0; s < alg.num_generators(); ++s)
        for (std::size_t k = 0; k < alg.dim(); ++k) {
            Vec prod = alg.gen_left(s).apply(words[k]);
            if (gen(s) * w[k] != rho(prod))
                return false;
        }
    return true;
}

const SpinData& AMod::spin() const
{
    std::call_once(data_->spin_once, [this] {
        const Field& f = field();
        const std::size_t n = dim();
        auto sd = std::make_unique<SpinData>();
        Echelon ech(f, n, true);
        std::vector<Vec> vecs;
        for (std::size_t i = 0; i < n && vecs.size() < n; ++i) {
            Vec e(n, 0);
            e[i] = 1;
            if (ech.contains(e))
                continue;
            std::size_t start = vecs.size();
            ech.insert(e);
            vecs.push_back(e);
            sd->seeds.push_back(start);
            sd->seed_of.push_back(start);
            sd->parent.push_back(start);
            sd->via.push_back(std::size_t(-1));
            for (std::size_t k = start; k < vecs.size(); ++k) {
                for (std::size_t s = 0; s < gens().size(); ++s) {
                    Vec w = gen(s).apply(vecs[k]);
                    auto c = ech.express(w);
                    if (c) {
                        c->resize(n, 0);
                        sd->relations.push_back({s, k, std::move(*c)});
                    } else {
                        ech.insert(w);
                        vecs.push_back(std::move(w));
                        sd->seed_of.push_back(start);
                        sd->parent.push_back(k);
                        sd->via.push_back(s);
                    }
                }
            }
        }
        // Relations recorded before later seeds were added remain valid; all
        // coefficient vectors are padded to full length.
        sd->basis = Matrix(f, n, n);
        for (std::size_t k = 0; k < n; ++k)
            sd->basis.set_col(k, vecs[k]);
        sd->basis_inv = n ? *mat_inverse(sd->basis) : Matrix(f, 0, 0);
        for (std::size_t k = 0; k < sd->seed_of.size(); ++k) {
            // seed_of holds the position of the seed; convert to seed ordinal
            std::size_t pos = sd->seed_of[k];
            std::size_t ord = 0;
            while (sd->seeds[ord] != pos)
                ++ord;
            sd->seed_of[k] = ord;
        }
        data_->spin = std::move(sd);
    });
    return *data_->spin;
}

}  // namespace tau
