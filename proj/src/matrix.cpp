#include "tensoradj/matrix.hpp"

#include "tensoradj/errors.hpp"

#include <string>

namespace tensoradj {

namespace {

std::string shape(const ExactMatrix& a)
{
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), n_(1)
{
    if (rows < 0 || cols < 0)
        throw ShapeError("negative matrix dimension");
    e_.assign(static_cast<size_t>(rows) * cols, ExactScalar());
}

ExactMatrix ExactMatrix::identity(int n)
{
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.e_[static_cast<size_t>(i) * n + i] = ExactScalar(1);
    return m;
}

ExactMatrix ExactMatrix::scalar(const ExactScalar& s)
{
    ExactMatrix m(1, 1);
    m.set(0, 0, s);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<ExactScalar>>& rows)
{
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    ExactMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw ShapeError("ragged matrix rows");
        for (int j = 0; j < c; ++j)
            m.set(i, j, rows[i][j]);
    }
    return m;
}

void ExactMatrix::lift(int m)
{
    if (m == n_)
        return;
    for (auto& x : e_)
        if (x.conductor() != m)
            x = x.embed(m);
    n_ = m;
}

void ExactMatrix::set(int i, int j, const ExactScalar& v)
{
    if (v.conductor() == n_) {
        e_[static_cast<size_t>(i) * cols_ + j] = v;
        return;
    }
    int m = lcm_conductor(n_, v.conductor());
    lift(m);
    e_[static_cast<size_t>(i) * cols_ + j] = v.embed(m);
}

void ExactMatrix::add_to(int i, int j, const ExactScalar& v)
{
    if (v.conductor() != n_)
        lift(lcm_conductor(n_, v.conductor()));
    auto& x = e_[static_cast<size_t>(i) * cols_ + j];
    x += v.conductor() == n_ ? v : v.embed(n_);
}

bool ExactMatrix::is_zero() const
{
    for (const auto& x : e_)
        if (!x.is_zero())
            return false;
    return true;
}

bool ExactMatrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const auto& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero())
                return false;
        }
    return true;
}

ExactMatrix ExactMatrix::transpose() const
{
    ExactMatrix t(cols_, rows_);
    t.n_ = n_;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.e_[static_cast<size_t>(j) * rows_ + i] = (*this)(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator-() const
{
    ExactMatrix r = *this;
    for (auto& x : r.e_)
        x = -x;
    return r;
}

ExactMatrix ExactMatrix::scaled(const ExactScalar& s) const
{
    ExactMatrix r = *this;
    int m = lcm_conductor(n_, s.conductor());
    r.lift(m);
    ExactScalar t = s.embed(m);
    for (auto& x : r.e_)
        if (!x.is_zero())
            x *= t;
    return r;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw ShapeError("add: " + shape(a) + " vs " + shape(b));
    ExactMatrix r = a;
    int m = lcm_conductor(a.n_, b.n_);
    r.lift(m);
    for (size_t k = 0; k < r.e_.size(); ++k)
        if (!b.e_[k].is_zero())
            r.e_[k] += b.n_ == m ? b.e_[k] : b.e_[k].embed(m);
    return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + (-b); }

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw ShapeError("mul: " + shape(a) + " * " + shape(b));
    int m = lcm_conductor(a.n_, b.n_);
    ExactMatrix r(a.rows_, b.cols_);
    r.n_ = m;
    for (auto& x : r.e_)
        x = x.embed(m);
    const ExactMatrix* pa = &a;
    const ExactMatrix* pb = &b;
    ExactMatrix la, lb;
    if (a.n_ != m) {
        la = a;
        la.lift(m);
        pa = &la;
    }
    if (b.n_ != m) {
        lb = b;
        lb.lift(m);
        pb = &lb;
    }
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const ExactScalar& x = (*pa)(i, k);
            if (x.is_zero())
                continue;
            for (int j = 0; j < b.cols_; ++j) {
                const ExactScalar& y = (*pb)(k, j);
                if (y.is_zero())
                    continue;
                r.e_[static_cast<size_t>(i) * r.cols_ + j] += x * y;
            }
        }
    return r;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        return false;
    for (size_t k = 0; k < a.e_.size(); ++k)
        if (a.e_[k] != b.e_[k])
            return false;
    return true;
}

ExactMatrix ExactMatrix::block(int r0, int c0, int nr, int nc) const
{
    if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
        throw ShapeError("block out of range");
    ExactMatrix r(nr, nc);
    r.n_ = n_;
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            r.e_[static_cast<size_t>(i) * nc + j] = (*this)(r0 + i, c0 + j);
    return r;
}

void ExactMatrix::set_block(int r0, int c0, const ExactMatrix& b)
{
    if (r0 < 0 || c0 < 0 || r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw ShapeError("set_block out of range");
    if (b.n_ != n_)
        lift(lcm_conductor(n_, b.n_));
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) {
            const ExactScalar& v = b(i, j);
            e_[static_cast<size_t>(r0 + i) * cols_ + c0 + j] = v.conductor() == n_ ? v : v.embed(n_);
        }
}

ExactMatrix ExactMatrix::hstack(const std::vector<ExactMatrix>& parts, int rows)
{
    int cols = 0;
    for (const auto& p : parts) {
        if (p.rows_ != rows)
            throw ShapeError("hstack row mismatch");
        cols += p.cols_;
    }
    ExactMatrix r(rows, cols);
    int c = 0;
    for (const auto& p : parts) {
        r.set_block(0, c, p);
        c += p.cols_;
    }
    return r;
}

ExactMatrix ExactMatrix::vstack(const std::vector<ExactMatrix>& parts, int cols)
{
    int rows = 0;
    for (const auto& p : parts) {
        if (p.cols_ != cols)
            throw ShapeError("vstack column mismatch");
        rows += p.rows_;
    }
    ExactMatrix r(rows, cols);
    int c = 0;
    for (const auto& p : parts) {
        r.set_block(c, 0, p);
        c += p.rows_;
    }
    return r;
}

ExactMatrix ExactMatrix::kron(const ExactMatrix& a, const ExactMatrix& b)
{
    ExactMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            if (a(i, j).is_zero())
                continue;
            r.set_block(i * b.rows_, j * b.cols_, b.scaled(a(i, j)));
        }
    return r;
}

Echelon row_reduce(const ExactMatrix& input)
{
    ExactMatrix a = input;
    int rows = a.rows(), cols = a.cols();
    std::vector<int> pivots;
    ExactScalar prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a(p, c).is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) {
                ExactScalar t = a(p, j);
                a.set(p, j, a(r, j));
                a.set(r, j, t);
            }
        ExactScalar piv = a(r, c);
        ExactScalar inv_prev = prev.inv();
        for (int i = r + 1; i < rows; ++i) {
            ExactScalar lead = a(i, c);
            for (int j = c + 1; j < cols; ++j) {
                ExactScalar v = piv * a(i, j);
                if (!lead.is_zero())
                    v -= lead * a(r, j);
                a.set(i, j, v * inv_prev);
            }
            a.set(i, c, ExactScalar());
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    // Normalize pivots and clear above them.
    for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
        int c = pivots[i];
        ExactScalar inv = a(i, c).inv();
        for (int j = c; j < cols; ++j)
            if (!a(i, j).is_zero())
                a.set(i, j, a(i, j) * inv);
        for (int k = 0; k < i; ++k) {
            ExactScalar f = a(k, c);
            if (f.is_zero())
                continue;
            for (int j = c; j < cols; ++j)
                if (!a(i, j).is_zero())
                    a.set(k, j, a(k, j) - f * a(i, j));
        }
    }
    // Rows below the rank are zero after Bareiss; clear them exactly.
    for (int i = static_cast<int>(pivots.size()); i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            a.set(i, j, ExactScalar());
    return {a, pivots};
}

int rank(const ExactMatrix& a) { return static_cast<int>(row_reduce(a).pivots.size()); }

std::vector<ExactMatrix> kernel_basis(const ExactMatrix& a)
{
    Echelon e = row_reduce(a);
    int cols = a.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivots)
        is_pivot[c] = true;
    std::vector<ExactMatrix> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        ExactMatrix v(cols, 1);
        v.set(f, 0, ExactScalar(1));
        for (size_t i = 0; i < e.pivots.size(); ++i) {
            const ExactScalar& x = e.rref(static_cast<int>(i), f);
            if (!x.is_zero())
                v.set(e.pivots[i], 0, -x);
        }
        basis.push_back(v);
    }
    return basis;
}

LinearSolution solve_linear(const ExactMatrix& a, const ExactMatrix& b)
{
    if (a.rows() != b.rows())
        throw ShapeError("solve_linear: A is " + shape(a) + ", b is " + shape(b));
    int n = a.cols();
    ExactMatrix aug = ExactMatrix::hstack({a, b}, a.rows());
    Echelon e = row_reduce(aug);
    LinearSolution sol;
    sol.kernel = kernel_basis(a);
    for (int c : e.pivots)
        if (c >= n) {
            sol.kind = LinearSolution::Inconsistent;
            return sol;
        }
    ExactMatrix x(n, b.cols());
    for (size_t i = 0; i < e.pivots.size(); ++i)
        for (int j = 0; j < b.cols(); ++j)
            x.set(e.pivots[i], j, e.rref(static_cast<int>(i), n + j));
    sol.particular = x;
    sol.kind = sol.kernel.empty() ? LinearSolution::Unique : LinearSolution::Affine;
    return sol;
}

ExactMatrix inverse(const ExactMatrix& a)
{
    if (!a.is_square())
        throw ShapeError("inverse of non-square " + shape(a));
    LinearSolution s = solve_linear(a, ExactMatrix::identity(a.rows()));
    if (!s.unique())
        throw DivisionByZero("singular matrix");
    return s.particular;
}

bool is_invertible(const ExactMatrix& a) { return a.is_square() && rank(a) == a.rows(); }

}  // namespace tensoradj
