#ifndef FOLIATION_MATRIX_HPP
#define FOLIATION_MATRIX_HPP

#include "foliation/scalar.hpp"

#include <vector>

namespace foliation {

// Small dense complex matrix over Scalar, mode-homogeneous. Row major.
class ScalarMatrix {
public:
    ScalarMatrix(int rows, int cols, Mode mode);

    static ScalarMatrix identity(int n, Mode mode);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Mode mode() const { return mode_; }

    const Scalar& at(int r, int c) const { return a_[r * cols_ + c]; }
    Scalar& at(int r, int c) { return a_[r * cols_ + c]; }

    ScalarMatrix operator+(const ScalarMatrix& o) const;
    ScalarMatrix operator-(const ScalarMatrix& o) const;
    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix scaled(const Scalar& c) const;

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

    bool is_zero() const;
    double max_abs() const;

    Scalar det() const;
    ScalarMatrix inverse() const;  // throws SingularMatrixError
    ScalarMatrix power(long e) const;

    // reduced row echelon form; returns pivot column indices
    std::vector<int> rref_in_place();
    // basis of the right nullspace, one column vector per basis element,
    // normalized so the first nonzero entry (lowest row index among free
    // variable rows) is 1; deterministic order
    std::vector<std::vector<Scalar>> nullspace() const;

    // monic characteristic polynomial coefficients c_0..c_n with
    // p(t) = t^n + c_{n-1} t^{n-1} + ... + c_0 (Faddeev-LeVerrier)
    std::vector<Scalar> char_poly() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    ScalarMatrix to_float() const;
    ScalarMatrix to_exact() const;

private:
    int rows_;
    int cols_;
    Mode mode_;
    std::vector<Scalar> a_;
};

// p(M) for a scalar polynomial given by coefficients c_0..c_d (c_d highest)
ScalarMatrix eval_poly(const std::vector<Scalar>& coeffs, const ScalarMatrix& m);

}  // namespace foliation

#endif
