#include "tau/exactfield.hpp"

#include <algorithm>
#include <cassert>

namespace tau {

namespace {

// dst[0..len) += c * src[0..len)
inline void row_axpy(const Field& f, Scalar* dst, const Scalar* src, Scalar c, std::size_t len)
{
    if (c == 0)
        return;
    if (f.is_prime()) {
        const unsigned p = f.p();
        for (std::size_t k = 0; k < len; ++k)
            if (src[k])
                dst[k] = Scalar((dst[k] + unsigned(c) * src[k]) % p);
    } else {
        for (std::size_t k = 0; k < len; ++k)
            if (src[k])
                dst[k] = f.add(dst[k], f.mul(c, src[k]));
    }
}

inline void row_scale(const Field& f, Scalar* dst, Scalar c, std::size_t len)
{
    for (std::size_t k = 0; k < len; ++k)
        dst[k] = f.mul(dst[k], c);
}

}  // namespace

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

Matrix Matrix::identity(const Field& f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_ints(const Field& f, std::size_t rows, std::size_t cols,
                         const std::vector<long long>& entries)
{
    if (entries.size() != rows * cols)
        throw std::invalid_argument("entry count does not match shape");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.data_[i] = f.from_int(entries[i]);
    return m;
}

Matrix Matrix::column(const Field& f, const Vec& v)
{
    Matrix m(f, v.size(), 1);
    m.data_ = v;
    return m;
}

Matrix Matrix::random(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng)
{
    Matrix m(f, rows, cols);
    for (auto& x : m.data_)
        x = f.random(rng);
    return m;
}

Vec Matrix::col(std::size_t j) const
{
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = data_[i * cols_ + j];
    return v;
}

void Matrix::set_col(std::size_t j, const Vec& v)
{
    for (std::size_t i = 0; i < rows_; ++i)
        data_[i * cols_ + j] = v[i];
}

Matrix Matrix::transpose() const
{
    Matrix t(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.data_[j * rows_ + i] = data_[i * cols_ + j];
    return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    Matrix b(*field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        std::copy_n(row(r0 + i) + c0, nc, b.row(i));
    return b;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const
{
    Matrix b(*field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            b.data_[i * idx.size() + j] = data_[i * cols_ + idx[j]];
    return b;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const
{
    Matrix b(*field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        std::copy_n(row(idx[i]), cols_, b.row(i));
    return b;
}

Matrix Matrix::scaled(Scalar c) const
{
    Matrix b = *this;
    row_scale(*field_, b.data_.data(), c, b.data_.size());
    return b;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

bool Matrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (data_[i * cols_ + j] != (i == j ? 1 : 0))
                return false;
    return true;
}

Vec Matrix::apply(const Vec& v) const
{
    assert(v.size() == cols_);
    Vec out(rows_, 0);
    const Field& f = *field_;
    if (f.is_prime()) {
        const std::uint64_t p = f.p();
        for (std::size_t i = 0; i < rows_; ++i) {
            std::uint64_t acc = 0;
            const Scalar* r = row(i);
            for (std::size_t k = 0; k < cols_; ++k)
                acc += std::uint64_t(r[k]) * v[k];
            out[i] = Scalar(acc % p);
        }
    } else {
        for (std::size_t i = 0; i < rows_; ++i) {
            Scalar acc = 0;
            const Scalar* r = row(i);
            for (std::size_t k = 0; k < cols_; ++k)
                if (r[k] && v[k])
                    acc = f.add(acc, f.mul(r[k], v[k]));
            out[i] = acc;
        }
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    const Field& f = *field_;
    Matrix c(f, rows_, o.cols_);
    const std::size_t n = o.cols_;
    if (f.is_prime()) {
        const std::uint64_t p = f.p();
        std::vector<std::uint64_t> acc(n);
        // Flush before the accumulator could overflow.
        const std::size_t flush = std::size_t(~std::uint64_t(0) / ((p - 1) * (p - 1) + 1)) - 1;
        for (std::size_t i = 0; i < rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            std::size_t cnt = 0;
            const Scalar* a = row(i);
            for (std::size_t k = 0; k < cols_; ++k) {
                const std::uint64_t x = a[k];
                if (!x)
                    continue;
                const Scalar* b = o.row(k);
                for (std::size_t j = 0; j < n; ++j)
                    acc[j] += x * b[j];
                if (++cnt == flush) {
                    for (auto& v : acc)
                        v %= p;
                    cnt = 0;
                }
            }
            Scalar* out = c.row(i);
            for (std::size_t j = 0; j < n; ++j)
                out[j] = Scalar(acc[j] % p);
        }
    } else {
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar* a = row(i);
            Scalar* out = c.row(i);
            for (std::size_t k = 0; k < cols_; ++k)
                row_axpy(f, out, o.row(k), a[k], n);
        }
    }
    return c;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    Matrix c = *this;
    c += o;
    return c;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] = field_->add(data_[i], o.data_[i]);
    return *this;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    Matrix c = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        c.data_[i] = field_->sub(data_[i], o.data_[i]);
    return c;
}

void Matrix::axpy(Scalar c, const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix axpy shape mismatch");
    row_axpy(*field_, data_.data(), o.data_.data(), c, data_.size());
}

bool Matrix::operator==(const Matrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix hstack(const std::vector<Matrix>& parts, const Field& f, std::size_t rows)
{
    std::size_t cols = 0;
    for (auto& p : parts) {
        if (p.rows() != rows)
            throw std::invalid_argument("hstack row mismatch");
        cols += p.cols();
    }
    Matrix out(f, rows, cols);
    std::size_t off = 0;
    for (auto& p : parts) {
        for (std::size_t i = 0; i < rows; ++i)
            std::copy_n(p.row(i), p.cols(), out.row(i) + off);
        off += p.cols();
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& parts, const Field& f, std::size_t cols)
{
    std::size_t rows = 0;
    for (auto& p : parts) {
        if (p.cols() != cols)
            throw std::invalid_argument("vstack column mismatch");
        rows += p.rows();
    }
    Matrix out(f, rows, cols);
    std::size_t off = 0;
    for (auto& p : parts) {
        for (std::size_t i = 0; i < p.rows(); ++i)
            std::copy_n(p.row(i), cols, out.row(off + i));
        off += p.rows();
    }
    return out;
}

Matrix block_diag(const std::vector<Matrix>& parts, const Field& f)
{
    std::size_t r = 0, c = 0;
    for (auto& p : parts) {
        r += p.rows();
        c += p.cols();
    }
    Matrix out(f, r, c);
    std::size_t ro = 0, co = 0;
    for (auto& p : parts) {
        for (std::size_t i = 0; i < p.rows(); ++i)
            std::copy_n(p.row(i), p.cols(), out.row(ro + i) + co);
        ro += p.rows();
        co += p.cols();
    }
    return out;
}

Rref mat_rref(const Matrix& a)
{
    Rref r{a, {}};
    Matrix& m = r.reduced;
    if (!a.has_field())
        return r;
    const Field& f = a.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = prow; i < rows; ++i)
            if (m(i, c)) {
                sel = i;
                break;
            }
        if (sel == rows)
            continue;
        if (sel != prow)
            std::swap_ranges(m.row(sel), m.row(sel) + cols, m.row(prow));
        row_scale(f, m.row(prow), f.inv(m(prow, c)), cols);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != prow && m(i, c))
                row_axpy(f, m.row(i) + c, m.row(prow) + c, f.neg(m(i, c)), cols - c);
        r.pivots.push_back(c);
        ++prow;
    }
    return r;
}

std::size_t mat_rank(const Matrix& a)
{
    if (a.rows() == 0 || a.cols() == 0)
        return 0;
    // Eliminate on the shorter side.
    if (a.rows() > a.cols())
        return mat_rref(a.transpose()).pivots.size();
    return mat_rref(a).pivots.size();
}

std::optional<Matrix> mat_try_solve(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve: row mismatch");
    const Field& f = a.field();
    const std::size_t n = a.cols(), k = b.cols();
    Matrix aug = hstack({a, b}, f, a.rows());
    Rref r = mat_rref(aug);
    Matrix x(f, n, k);
    std::size_t i = 0;
    for (; i < r.pivots.size(); ++i) {
        std::size_t c = r.pivots[i];
        if (c >= n)
            return std::nullopt;
        for (std::size_t j = 0; j < k; ++j)
            x.at(c, j) = r.reduced(i, n + j);
    }
    return x;
}

Matrix mat_solve(const Matrix& a, const Matrix& b)
{
    auto x = mat_try_solve(a, b);
    if (!x)
        throw NoSolution();
    return *x;
}

Matrix mat_nullspace(const Matrix& a)
{
    const Field& f = a.field();
    const std::size_t n = a.cols();
    Rref r = mat_rref(a);
    std::vector<char> is_piv(n, 0);
    for (auto c : r.pivots)
        is_piv[c] = 1;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_piv[c])
            free.push_back(c);
    Matrix ns(f, n, free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
        ns.at(free[j], j) = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            ns.at(r.pivots[i], j) = f.neg(r.reduced(i, free[j]));
    }
    return ns;
}

Matrix mat_kron(const Matrix& a, const Matrix& b)
{
    const Field& f = a.field();
    Matrix k(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            Scalar x = a(i, j);
            if (!x)
                continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    k.at(i * b.rows() + r, j * b.cols() + c) = f.mul(x, b(r, c));
        }
    return k;
}

std::optional<Matrix> mat_inverse(const Matrix& a)
{
    if (a.rows() != a.cols())
        return std::nullopt;
    const std::size_t n = a.rows();
    Rref r = mat_rref(hstack({a, Matrix::identity(a.field(), n)}, a.field(), n));
    if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1))
        return std::nullopt;
    return r.reduced.block(0, n, n, n);
}

Matrix mat_pow(const Matrix& a, std::uint64_t e)
{
    Matrix result = Matrix::identity(a.field(), a.rows());
    Matrix base = a;
    while (e) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

Matrix col_basis(const Matrix& a)
{
    if (a.cols() == 0)
        return a;
    Rref r = mat_rref(a);
    return a.select_cols(r.pivots);
}

std::vector<std::size_t> complement_indices(const Matrix& a)
{
    const std::size_t n = a.rows();
    Matrix aug = hstack({a, Matrix::identity(a.field(), n)}, a.field(), n);
    Rref r = mat_rref(aug);
    std::vector<std::size_t> out;
    for (auto c : r.pivots)
        if (c >= a.cols())
            out.push_back(c - a.cols());
    return out;
}

Echelon::Echelon(const Field& f, std::size_t len, bool track) : f_(&f), len_(len), track_(track) {}

bool Echelon::reduce(Vec& v, Vec* coeffs) const
{
    const Field& f = *f_;
    if (coeffs)
        coeffs->assign(inserted_.size(), 0);
    bool zero = true;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Scalar c = v[piv_[i]];
        if (!c)
            continue;
        // Stored rows are normalized to have 1 at the pivot.
        row_axpy(f, v.data(), rows_[i].data(), f.neg(c), len_);
        if (coeffs)
            row_axpy(f, coeffs->data(), trans_[i].data(), c, trans_[i].size());
    }
    for (auto x : v)
        if (x) {
            zero = false;
            break;
        }
    return zero;
}

bool Echelon::insert(Vec v)
{
    const Field& f = *f_;
    Vec orig;
    if (track_)
        orig = v;
    Vec coeffs;
    if (reduce(v, track_ ? &coeffs : nullptr))
        return false;
    std::size_t pc = 0;
    while (v[pc] == 0)
        ++pc;
    Scalar s = f.inv(v[pc]);
    row_scale(f, v.data(), s, len_);
    // Keep rows fully reduced: clear the new pivot column from existing rows.
    Vec t;
    if (track_) {
        // v_reduced = orig - sum coeffs_k inserted_k, scaled by s.
        t.assign(inserted_.size() + 1, 0);
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            t[k] = f.neg(f.mul(s, coeffs[k]));
        t[inserted_.size()] = s;
        for (auto& tr : trans_)
            tr.push_back(0);
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Scalar c = rows_[i][pc];
        if (!c)
            continue;
        row_axpy(f, rows_[i].data(), v.data(), f.neg(c), len_);
        if (track_)
            row_axpy(f, trans_[i].data(), t.data(), f.neg(c), t.size());
    }
    rows_.push_back(std::move(v));
    piv_.push_back(pc);
    if (track_) {
        trans_.push_back(std::move(t));
        inserted_.push_back(std::move(orig));
    } else {
        inserted_.emplace_back();
    }
    return true;
}

std::optional<Vec> Echelon::express(Vec v) const
{
    if (!track_)
        throw std::logic_error("express requires a tracking echelon");
    Vec coeffs;
    if (!reduce(v, &coeffs))
        return std::nullopt;
    return coeffs;
}

Matrix mat_left_inverse(const Matrix& b)
{
    const Field& f = b.field();
    const std::size_t r = b.cols();
    Rref rr = mat_rref(b.transpose());
    if (rr.pivots.size() != r)
        throw std::invalid_argument("basis is not linearly independent");
    Matrix sub = b.select_rows(rr.pivots);
    Matrix inv = *mat_inverse(sub);
    Matrix out(f, r, b.rows());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            out.at(i, rr.pivots[j]) = inv(i, j);
    return out;
}

}  // namespace tau
