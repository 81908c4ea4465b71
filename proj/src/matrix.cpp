#include "foliation/matrix.hpp"

#include "foliation/errors.hpp"

#include <algorithm>
#include <cmath>

namespace foliation {

ScalarMatrix::ScalarMatrix(int rows, int cols, Mode mode)
    : rows_(rows), cols_(cols), mode_(mode), a_(rows * cols, Scalar::zero(mode)) {
    if (rows < 1 || cols < 1) throw DimensionError("matrix dimensions must be positive");
}

ScalarMatrix ScalarMatrix::identity(int n, Mode mode) {
    ScalarMatrix m(n, n, mode);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(mode);
    return m;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
    ScalarMatrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
    ScalarMatrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    ScalarMatrix r(rows_, o.cols_, mode_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& c) const {
    ScalarMatrix r(*this);
    for (auto& x : r.a_) x *= c;
    return r;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.mode_ != b.mode_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (!(a.a_[i] == b.a_[i])) return false;
    return true;
}

bool ScalarMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

double ScalarMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& s : a_) m = std::max(m, s.abs());
    return m;
}

namespace {
// pivot choice: exact mode takes the first nonzero (deterministic), float
// mode takes the largest magnitude
int pick_pivot(const ScalarMatrix& m, int col, int from_row) {
    if (m.mode() == Mode::exact) {
        for (int r = from_row; r < m.rows(); ++r)
            if (!m.at(r, col).is_zero()) return r;
        return -1;
    }
    int best = -1;
    double mag = 0.0;
    for (int r = from_row; r < m.rows(); ++r) {
        double v = m.at(r, col).abs();
        if (v > mag) {
            mag = v;
            best = r;
        }
    }
    if (mag <= 1e-13) return -1;
    return best;
}
}  // namespace

std::vector<int> ScalarMatrix::rref_in_place() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int p = pick_pivot(*this, col, row);
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
        Scalar inv = at(row, col).inverse();
        for (int j = 0; j < cols_; ++j) at(row, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == row || at(r, col).is_zero()) continue;
            Scalar f = at(r, col);
            for (int j = 0; j < cols_; ++j) at(r, j) -= f * at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Scalar>> ScalarMatrix::nullspace() const {
    ScalarMatrix m(*this);
    std::vector<int> pivots = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(mode_));
        v[free] = Scalar::one(mode_);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar ScalarMatrix::det() const {
    if (rows_ != cols_) throw DimensionError("determinant of non-square matrix");
    ScalarMatrix m(*this);
    Scalar d = Scalar::one(mode_);
    for (int col = 0; col < cols_; ++col) {
        int p = pick_pivot(m, col, col);
        if (p < 0) return Scalar::zero(mode_);
        if (p != col) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Scalar inv = m.at(col, col).inverse();
        for (int r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col) * inv;
            for (int j = col; j < cols_; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

ScalarMatrix ScalarMatrix::inverse() const {
    if (rows_ != cols_) throw DimensionError("inverse of non-square matrix");
    ScalarMatrix aug(rows_, 2 * cols_, mode_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar::one(mode_);
    }
    std::vector<int> pivots = aug.rref_in_place();
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_)
        throw SingularMatrixError("matrix is singular");
    ScalarMatrix inv(rows_, cols_, mode_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

ScalarMatrix ScalarMatrix::power(long e) const {
    if (rows_ != cols_) throw DimensionError("power of non-square matrix");
    if (e < 0) return inverse().power(-e);
    ScalarMatrix r = identity(rows_, mode_);
    ScalarMatrix base(*this);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

std::vector<Scalar> ScalarMatrix::char_poly() const {
    if (rows_ != cols_) throw DimensionError("characteristic polynomial of non-square matrix");
    const int n = rows_;
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1);
    // M_k = A(M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k
    std::vector<Scalar> c(n + 1, Scalar::zero(mode_));
    c[n] = Scalar::one(mode_);
    ScalarMatrix m = *this;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            ScalarMatrix shifted = m;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
            m = *this * shifted;
        }
        Scalar tr = Scalar::zero(mode_);
        for (int i = 0; i < n; ++i) tr += m.at(i, i);
        Scalar ck = -tr;
        Scalar kk = mode_ == Mode::exact ? Scalar::exact_int(k) : Scalar::floating(k);
        c[n - k] = ck / kk;
    }
    return c;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw DimensionError("matrix-vector shape mismatch");
    std::vector<Scalar> r(rows_, Scalar::zero(mode_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

ScalarMatrix ScalarMatrix::to_float() const {
    ScalarMatrix r(rows_, cols_, Mode::floating);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).to_float();
    return r;
}

ScalarMatrix ScalarMatrix::to_exact() const {
    if (mode_ == Mode::exact) return *this;
    throw ModeError("float matrices lift through series, not directly");
}

ScalarMatrix eval_poly(const std::vector<Scalar>& coeffs, const ScalarMatrix& m) {
    if (coeffs.empty()) throw ValidationError("empty polynomial");
    ScalarMatrix acc(m.rows(), m.cols(), m.mode());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * m;
        for (int i = 0; i < m.rows(); ++i) acc.at(i, i) += *it;
    }
    return acc;
}

}  // namespace foliation
