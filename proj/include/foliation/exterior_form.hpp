#ifndef FOLIATION_EXTERIOR_FORM_HPP
#define FOLIATION_EXTERIOR_FORM_HPP

#include "foliation/series.hpp"

#include <map>
#include <span>
#include <vector>

namespace foliation {

// Degree-q exterior form with series coefficients, stored sparsely on
// strictly increasing index tuples (i_1 < ... < i_q), 0-based.
class ExteriorForm {
public:
    ExteriorForm(int degree, int nvars, int cap, Mode mode);

    int form_degree() const { return degree_; }
    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    Mode mode() const { return mode_; }

    const std::map<std::vector<int>, TruncatedSeries>& coefficients() const { return coeffs_; }
    // zero series when the tuple is absent
    TruncatedSeries coefficient(const std::vector<int>& tuple) const;
    void set_coefficient(std::vector<int> tuple, TruncatedSeries s);

    bool is_zero() const { return coeffs_.empty(); }

    ExteriorForm operator-() const;
    ExteriorForm operator+(const ExteriorForm& o) const;
    ExteriorForm operator-(const ExteriorForm& o) const;

    friend bool operator==(const ExteriorForm& a, const ExteriorForm& b);

    // max coefficient magnitude over all tuples
    double max_abs() const;

private:
    int degree_;
    int nvars_;
    int cap_;
    Mode mode_;
    std::map<std::vector<int>, TruncatedSeries> coeffs_;
};

// df_1 ^ ... ^ df_q: the dx_{i_1}^...^dx_{i_q} coefficient is the q x q
// determinant of partials d f_a / d x_{i_b}. Tuples are computed
// independently (OpenMP) and assembled in canonical tuple order.
ExteriorForm wedge(std::span<const TruncatedSeries> fs);

}  // namespace foliation

#endif
