#ifndef FOLIATION_SERIES_HPP
#define FOLIATION_SERIES_HPP

#include "foliation/multidegree.hpp"
#include "foliation/scalar.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace foliation {

// Multivariate power series over C truncated at a fixed total degree cap,
// i.e. an element of C[[x_1..x_n]] / m^(cap+1). Terms are kept sorted in the
// canonical multidegree order with no zero coefficients, so equal series have
// identical term vectors. Values are immutable after construction; every
// operation allocates a fresh result.
class TruncatedSeries {
public:
    struct Term {
        Multidegree deg;
        Scalar coeff;
    };

    TruncatedSeries(int nvars, int cap, Mode mode);

    static TruncatedSeries zero(int nvars, int cap, Mode mode) {
        return TruncatedSeries(nvars, cap, mode);
    }
    static TruncatedSeries constant(int nvars, int cap, const Scalar& c);
    static TruncatedSeries monomial(int nvars, int cap, const Multidegree& d, const Scalar& c);
    // the coordinate function x_j (0-based j)
    static TruncatedSeries variable(int nvars, int cap, int j, Mode mode);
    // normalizing constructor: sorts, combines duplicates, drops zeros and
    // terms beyond the cap
    static TruncatedSeries from_terms(int nvars, int cap, Mode mode, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    Mode mode() const { return mode_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coefficient(const Multidegree& d) const;
    Scalar constant_term() const { return coefficient(Multidegree::zero(nvars_)); }
    bool has_constant_term() const {
        return !terms_.empty() && terms_.front().deg.total() == 0;
    }
    // lowest total degree of a stored term; cap+1 for the zero series
    int low_degree() const { return terms_.empty() ? cap_ + 1 : terms_.front().deg.total(); }
    int degree() const { return terms_.empty() ? -1 : terms_.back().deg.total(); }
    double max_abs() const;

    TruncatedSeries operator-() const;
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scaled(const Scalar& c) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    TruncatedSeries derivative(int j) const;

    // f(map_0,...,map_{n-1}); every map component must share cap and mode,
    // live in a common variable count, and have zero constant term
    TruncatedSeries compose(std::span<const TruncatedSeries> map) const;

    Scalar evaluate(std::span<const Scalar> point) const;
    std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

    TruncatedSeries pow(int e) const;

    // substitutes a scalar value for variable j, producing a series in the
    // remaining nvars-1 variables
    TruncatedSeries substitute(int j, const Scalar& value) const;

    // inserts a fresh variable at position j (exponent 0 everywhere)
    TruncatedSeries lifted(int j) const;

    // explicit retruncation; lowering the cap drops terms, raising it keeps
    // all terms (the quotient map is only injective upward)
    TruncatedSeries with_cap(int new_cap) const;

    TruncatedSeries to_float() const;
    TruncatedSeries to_exact() const;  // float coefficients lift exactly (dyadics)

    // largest m with divisor^m dividing *this exactly in the polynomial
    // sense; nullopt encodes the +infinity of the zero dividend
    std::optional<int> vanishing_order(const TruncatedSeries& divisor) const;
    // exact polynomial division (nullopt if not divisible); valid whenever
    // deg(*this) <= cap so truncation cannot interfere
    std::optional<TruncatedSeries> divided_by(const TruncatedSeries& divisor) const;

    std::string to_string() const;

    void require_compatible(const TruncatedSeries& o) const;

private:
    int nvars_;
    int cap_;
    Mode mode_;
    std::vector<Term> terms_;

    friend TruncatedSeries mul_serial(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries mul_sliced(const TruncatedSeries&, const TruncatedSeries&);
};

// --- multiplication kernels (series_kernels.cpp) ---
//
// mul_serial is the plain nested-loop reference, kept for tests and the
// benchmark. mul_sliced is the production kernel: it partitions the left
// factor into a fixed number of slices, accumulates each slice independently
// (OpenMP across slices) and merges in slice order, so the result is
// bit-identical for any thread count.
TruncatedSeries mul_serial(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul_sliced(const TruncatedSeries& a, const TruncatedSeries& b);

double distance(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace foliation

#endif
