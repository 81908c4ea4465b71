#include "foliation/exterior_form.hpp"

#include "foliation/threading.hpp"

#include <algorithm>

namespace foliation {

ExteriorForm::ExteriorForm(int degree, int nvars, int cap, Mode mode)
    : degree_(degree), nvars_(nvars), cap_(cap), mode_(mode) {
    if (degree < 1 || degree > nvars)
        throw DimensionError("exterior form degree must lie in [1, nvars]");
}

TruncatedSeries ExteriorForm::coefficient(const std::vector<int>& tuple) const {
    auto it = coeffs_.find(tuple);
    if (it == coeffs_.end()) return TruncatedSeries::zero(nvars_, cap_, mode_);
    return it->second;
}

void ExteriorForm::set_coefficient(std::vector<int> tuple, TruncatedSeries s) {
    if (static_cast<int>(tuple.size()) != degree_)
        throw DimensionError("coefficient tuple has wrong length");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] < 0 || tuple[i] >= nvars_)
            throw DimensionError("coefficient tuple index out of range");
        if (i > 0 && tuple[i] <= tuple[i - 1])
            throw DimensionError("coefficient tuple must be strictly increasing");
    }
    if (s.nvars() != nvars_ || s.cap() != cap_ || s.mode() != mode_)
        throw DimensionError("coefficient series incompatible with form");
    if (s.is_zero())
        coeffs_.erase(tuple);
    else
        coeffs_.insert_or_assign(std::move(tuple), std::move(s));
}

ExteriorForm ExteriorForm::operator-() const {
    ExteriorForm r(degree_, nvars_, cap_, mode_);
    for (const auto& [t, s] : coeffs_) r.coeffs_.emplace(t, -s);
    return r;
}

ExteriorForm ExteriorForm::operator+(const ExteriorForm& o) const {
    if (degree_ != o.degree_ || nvars_ != o.nvars_ || cap_ != o.cap_ || mode_ != o.mode_)
        throw DimensionError("exterior form mismatch");
    ExteriorForm r(degree_, nvars_, cap_, mode_);
    r.coeffs_ = coeffs_;
    for (const auto& [t, s] : o.coeffs_) {
        auto it = r.coeffs_.find(t);
        if (it == r.coeffs_.end()) {
            r.coeffs_.emplace(t, s);
        } else {
            TruncatedSeries sum = it->second + s;
            if (sum.is_zero())
                r.coeffs_.erase(it);
            else
                it->second = std::move(sum);
        }
    }
    return r;
}

ExteriorForm ExteriorForm::operator-(const ExteriorForm& o) const { return *this + (-o); }

bool operator==(const ExteriorForm& a, const ExteriorForm& b) {
    if (a.degree_ != b.degree_ || a.nvars_ != b.nvars_ || a.cap_ != b.cap_ ||
        a.mode_ != b.mode_)
        return false;
    return a.coeffs_ == b.coeffs_;
}

double ExteriorForm::max_abs() const {
    double m = 0.0;
    for (const auto& [t, s] : coeffs_) m = std::max(m, s.max_abs());
    return m;
}

namespace {

TruncatedSeries det_recursive(const std::vector<std::vector<TruncatedSeries>>& m,
                              std::vector<int> cols, int nvars, int cap, Mode mode) {
    const int row = static_cast<int>(m.size()) - static_cast<int>(cols.size());
    if (cols.size() == 1) return m[row][cols[0]];
    TruncatedSeries acc = TruncatedSeries::zero(nvars, cap, mode);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (k != c) rest.push_back(cols[k]);
        TruncatedSeries minor = det_recursive(m, std::move(rest), nvars, cap, mode);
        TruncatedSeries contrib = m[row][cols[c]] * minor;
        acc = (c % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
}

void increasing_tuples(int nvars, int q, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == q) {
        out.push_back(cur);
        return;
    }
    int start = cur.empty() ? 0 : cur.back() + 1;
    for (int i = start; i < nvars; ++i) {
        cur.push_back(i);
        increasing_tuples(nvars, q, cur, out);
        cur.pop_back();
    }
}

}  // namespace

ExteriorForm wedge(std::span<const TruncatedSeries> fs) {
    if (fs.empty()) throw DimensionError("wedge of an empty family");
    const int q = static_cast<int>(fs.size());
    const int nvars = fs[0].nvars();
    const int cap = fs[0].cap();
    const Mode mode = fs[0].mode();
    if (q > nvars) throw DimensionError("wedge degree exceeds variable count");
    for (const auto& f : fs) fs[0].require_compatible(f);

    // all partials up front
    std::vector<std::vector<TruncatedSeries>> partials(q);
    for (int a = 0; a < q; ++a) {
        partials[a].reserve(nvars);
        for (int i = 0; i < nvars; ++i) partials[a].push_back(fs[a].derivative(i));
    }

    std::vector<std::vector<int>> tuples;
    std::vector<int> cur;
    increasing_tuples(nvars, q, cur, tuples);

    std::vector<TruncatedSeries> dets(tuples.size(), TruncatedSeries::zero(nvars, cap, mode));
#pragma omp parallel for schedule(dynamic) num_threads(max_threads()) if (tuples.size() > 1)
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        dets[t] = det_recursive(partials, tuples[t], nvars, cap, mode);
    }

    ExteriorForm form(q, nvars, cap, mode);
    for (std::size_t t = 0; t < tuples.size(); ++t)
        if (!dets[t].is_zero()) form.set_coefficient(tuples[t], std::move(dets[t]));
    return form;
}

}  // namespace foliation
