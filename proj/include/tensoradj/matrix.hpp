#pragma once

#include "tensoradj/scalar.hpp"

#include <vector>

namespace tensoradj {

// Dense matrix over a cyclotomic field; all entries share one conductor.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols);  // zero matrix

    static ExactMatrix identity(int n);
    static ExactMatrix zero(int rows, int cols) { return ExactMatrix(rows, cols); }
    static ExactMatrix scalar(const ExactScalar& s);  // 1x1
    static ExactMatrix from_rows(const std::vector<std::vector<ExactScalar>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int conductor() const { return n_; }

    const ExactScalar& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    ExactScalar get(int i, int j) const { return (*this)(i, j); }
    void set(int i, int j, const ExactScalar& v);
    void add_to(int i, int j, const ExactScalar& v);

    bool is_zero() const;
    bool is_identity() const;
    bool is_square() const { return rows_ == cols_; }

    ExactMatrix transpose() const;
    ExactMatrix operator-() const;
    ExactMatrix scaled(const ExactScalar& s) const;

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    ExactMatrix block(int r0, int c0, int nr, int nc) const;
    void set_block(int r0, int c0, const ExactMatrix& b);
    static ExactMatrix hstack(const std::vector<ExactMatrix>& parts, int rows);
    static ExactMatrix vstack(const std::vector<ExactMatrix>& parts, int cols);
    static ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

    ExactMatrix column(int j) const { return block(0, j, rows_, 1); }

    // Promotes every entry to conductor m (n | m).
    void lift(int m);

private:
    int rows_ = 0;
    int cols_ = 0;
    int n_ = 1;
    std::vector<ExactScalar> e_;
};

// Fraction-free (Bareiss) forward elimination followed by normalization to reduced row echelon form.
struct Echelon {
    ExactMatrix rref;
    std::vector<int> pivots;  // pivot column of each nonzero row
};
Echelon row_reduce(const ExactMatrix& a);

int rank(const ExactMatrix& a);
std::vector<ExactMatrix> kernel_basis(const ExactMatrix& a);  // column vectors

struct LinearSolution {
    enum Kind { Unique, Affine, Inconsistent };
    Kind kind = Inconsistent;
    ExactMatrix particular;            // cols(A) x cols(b), free variables set to zero
    std::vector<ExactMatrix> kernel;   // basis of ker A
    bool unique() const { return kind == Unique; }
    bool consistent() const { return kind != Inconsistent; }
};
LinearSolution solve_linear(const ExactMatrix& a, const ExactMatrix& b);

// Throws DivisionByZero when singular, ShapeError when not square.
ExactMatrix inverse(const ExactMatrix& a);
bool is_invertible(const ExactMatrix& a);

}  // namespace tensoradj
