#include "foliation/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace foliation {

TruncatedSeries::TruncatedSeries(int nvars, int cap, Mode mode)
    : nvars_(nvars), cap_(cap), mode_(mode) {
    if (nvars < 1) throw ValidationError("series needs at least one variable");
    if (cap < 0) throw ValidationError("negative truncation cap");
}

TruncatedSeries TruncatedSeries::constant(int nvars, int cap, const Scalar& c) {
    TruncatedSeries s(nvars, cap, c.mode());
    if (!c.is_zero()) s.terms_.push_back({Multidegree::zero(nvars), c});
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int nvars, int cap, const Multidegree& d,
                                          const Scalar& c) {
    if (d.nvars() != nvars) throw DimensionError("monomial multidegree has wrong arity");
    TruncatedSeries s(nvars, cap, c.mode());
    if (!c.is_zero() && d.total() <= cap) s.terms_.push_back({d, c});
    return s;
}

TruncatedSeries TruncatedSeries::variable(int nvars, int cap, int j, Mode mode) {
    if (j < 0 || j >= nvars) throw DimensionError("variable index out of range");
    return monomial(nvars, cap, Multidegree::unit(nvars, j), Scalar::one(mode));
}

TruncatedSeries TruncatedSeries::from_terms(int nvars, int cap, Mode mode,
                                            std::vector<Term> terms) {
    TruncatedSeries s(nvars, cap, mode);
    std::erase_if(terms, [&](const Term& t) { return t.deg.total() > cap; });
    for (const Term& t : terms) {
        if (t.deg.nvars() != nvars) throw DimensionError("term multidegree has wrong arity");
        if (t.coeff.mode() != mode) throw ModeError("term coefficient mode mismatch");
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.deg < b.deg; });
    for (auto& t : terms) {
        if (!s.terms_.empty() && s.terms_.back().deg == t.deg)
            s.terms_.back().coeff += t.coeff;
        else
            s.terms_.push_back(std::move(t));
    }
    std::erase_if(s.terms_, [](const Term& t) { return t.coeff.is_zero(); });
    return s;
}

Scalar TruncatedSeries::coefficient(const Multidegree& d) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                               [](const Term& t, const Multidegree& m) { return t.deg < m; });
    if (it != terms_.end() && it->deg == d) return it->coeff;
    return Scalar::zero(mode_);
}

double TruncatedSeries::max_abs() const {
    double m = 0.0;
    for (const Term& t : terms_) m = std::max(m, t.coeff.abs());
    return m;
}

void TruncatedSeries::require_compatible(const TruncatedSeries& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("series variable counts differ");
    if (cap_ != o.cap_) throw DimensionError("series truncation caps differ");
    if (mode_ != o.mode_) throw ModeError("series scalar modes differ");
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(nvars_, cap_, mode_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.deg, -t.coeff});
    return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    require_compatible(o);
    TruncatedSeries r(nvars_, cap_, mode_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->deg < b->deg)) {
            r.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->deg < a->deg) {
            r.terms_.push_back(*b++);
        } else {
            Scalar c = a->coeff + b->coeff;
            if (!c.is_zero()) r.terms_.push_back({a->deg, std::move(c)});
            ++a;
            ++b;
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + (-o);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    return mul_sliced(*this, o);
}

TruncatedSeries TruncatedSeries::scaled(const Scalar& c) const {
    if (c.mode() != mode_) throw ModeError("scale coefficient mode mismatch");
    TruncatedSeries r(nvars_, cap_, mode_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Scalar v = t.coeff * c;
        if (!v.is_zero()) r.terms_.push_back({t.deg, std::move(v)});
    }
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.nvars_ != b.nvars_ || a.cap_ != b.cap_ || a.mode_ != b.mode_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (!(a.terms_[i].deg == b.terms_[i].deg)) return false;
        if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
}

TruncatedSeries TruncatedSeries::derivative(int j) const {
    if (j < 0 || j >= nvars_) throw DimensionError("derivative index out of range");
    TruncatedSeries r(nvars_, cap_, mode_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        int e = t.deg[j];
        if (e == 0) continue;
        Scalar c = t.coeff;
        c.scale_int(e);
        r.terms_.push_back({t.deg.bump(j, -1), std::move(c)});
    }
    // term order is preserved: lowering one exponent keeps relative order
    // among terms that all lose the same variable, but not across different
    // totals, so re-sort to stay canonical
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return a.deg < b.deg; });
    return r;
}

TruncatedSeries TruncatedSeries::compose(std::span<const TruncatedSeries> map) const {
    if (static_cast<int>(map.size()) != nvars_)
        throw DimensionError("composition map arity mismatch");
    if (map.empty()) throw DimensionError("empty composition map");
    int out_vars = map[0].nvars();
    for (const auto& m : map) {
        if (m.nvars() != out_vars || m.cap() != cap_ || m.mode() != mode_)
            throw DimensionError("composition map components incompatible");
        if (m.has_constant_term())
            throw CompositionError("composition map component has nonzero constant term");
    }
    // power tables per variable, up to the largest exponent that occurs
    std::vector<int> max_exp(nvars_, 0);
    for (const Term& t : terms_)
        for (int i = 0; i < nvars_; ++i) max_exp[i] = std::max(max_exp[i], t.deg[i]);
    std::vector<std::vector<TruncatedSeries>> pow_tab(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        pow_tab[i].push_back(TruncatedSeries::constant(out_vars, cap_, Scalar::one(mode_)));
        for (int e = 1; e <= max_exp[i]; ++e) pow_tab[i].push_back(pow_tab[i].back() * map[i]);
    }
    TruncatedSeries acc(out_vars, cap_, mode_);
    for (const Term& t : terms_) {
        TruncatedSeries prod = TruncatedSeries::constant(out_vars, cap_, t.coeff);
        for (int i = 0; i < nvars_; ++i)
            if (t.deg[i] > 0) prod = prod * pow_tab[i][t.deg[i]];
        acc = acc + prod;
    }
    return acc;
}

Scalar TruncatedSeries::evaluate(std::span<const Scalar> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionError("evaluation point arity mismatch");
    Scalar acc = Scalar::zero(mode_);
    for (const Term& t : terms_) {
        Scalar v = t.coeff;
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < t.deg[i]; ++e) v *= point[i];
        acc += v;
    }
    return acc;
}

std::complex<double> TruncatedSeries::evaluate(
    std::span<const std::complex<double>> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionError("evaluation point arity mismatch");
    std::complex<double> acc = 0.0;
    for (const Term& t : terms_) {
        std::complex<double> v = t.coeff.to_complex();
        for (int i = 0; i < nvars_; ++i)
            for (int e = 0; e < t.deg[i]; ++e) v *= point[i];
        acc += v;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
    if (e < 0) throw ValidationError("negative series power");
    TruncatedSeries r = TruncatedSeries::constant(nvars_, cap_, Scalar::one(mode_));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

TruncatedSeries TruncatedSeries::substitute(int j, const Scalar& value) const {
    if (j < 0 || j >= nvars_) throw DimensionError("substitution index out of range");
    if (nvars_ < 2) throw DimensionError("substitution would eliminate the last variable");
    if (value.mode() != mode_) throw ModeError("substitution value mode mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Scalar c = t.coeff;
        for (int e = 0; e < t.deg[j]; ++e) c *= value;
        out.push_back({t.deg.without_var(j), std::move(c)});
    }
    return from_terms(nvars_ - 1, cap_, mode_, std::move(out));
}

TruncatedSeries TruncatedSeries::lifted(int j) const {
    if (j < 0 || j > nvars_) throw DimensionError("lift position out of range");
    TruncatedSeries r(nvars_ + 1, cap_, mode_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.deg.with_var(j), t.coeff});
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return a.deg < b.deg; });
    return r;
}

TruncatedSeries TruncatedSeries::with_cap(int new_cap) const {
    TruncatedSeries r(nvars_, new_cap, mode_);
    for (const Term& t : terms_)
        if (t.deg.total() <= new_cap) r.terms_.push_back(t);
    return r;
}

TruncatedSeries TruncatedSeries::to_float() const {
    TruncatedSeries r(nvars_, cap_, Mode::floating);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Scalar c = Scalar::floating(t.coeff.to_complex());
        if (!c.is_zero()) r.terms_.push_back({t.deg, std::move(c)});
    }
    return r;
}

namespace {
Rational rational_from_double(double x) {
    if (x == 0.0) return Rational(0);
    if (!std::isfinite(x)) throw ValidationError("non-finite float cannot lift to exact");
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    // 53 doublings make the mantissa integral
    long long mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mant);
    if (exp > 0)
        r *= Rational(BigInt(1) << exp);
    else if (exp < 0)
        r /= Rational(BigInt(1) << -exp);
    return r;
}
}  // namespace

TruncatedSeries TruncatedSeries::to_exact() const {
    TruncatedSeries r(nvars_, cap_, Mode::exact);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::complex<double> z = t.coeff.to_complex();
        Scalar c = Scalar::exact(GaussRational(rational_from_double(z.real()),
                                               rational_from_double(z.imag())));
        if (!c.is_zero()) r.terms_.push_back({t.deg, std::move(c)});
    }
    return r;
}

std::optional<TruncatedSeries> TruncatedSeries::divided_by(const TruncatedSeries& g) const {
    require_compatible(g);
    if (g.is_zero()) throw Error("polynomial division by zero");
    TruncatedSeries rem = *this;
    TruncatedSeries quot(nvars_, cap_, mode_);
    const Term& glead = g.terms_.back();  // canonical order puts the leading term last
    while (!rem.is_zero()) {
        const Term& rlead = rem.terms_.back();
        if (!rlead.deg.dominates(glead.deg)) return std::nullopt;
        Multidegree q = rlead.deg.minus(glead.deg);
        Scalar c = rlead.coeff / glead.coeff;
        TruncatedSeries t = TruncatedSeries::monomial(nvars_, cap_, q, c);
        quot = quot + t;
        rem = rem - t * g;
    }
    return quot;
}

std::optional<int> TruncatedSeries::vanishing_order(const TruncatedSeries& g) const {
    require_compatible(g);
    if (g.is_zero() || g.degree() < 1)
        throw ValidationError("vanishing order needs a non-constant divisor");
    if (is_zero()) return std::nullopt;  // +infinity
    int order = 0;
    TruncatedSeries cur = *this;
    while (true) {
        auto q = cur.divided_by(g);
        if (!q) return order;
        cur = std::move(*q);
        ++order;
        if (cur.is_zero()) return order;
    }
}

std::string TruncatedSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first) os << " + ";
        first = false;
        if (mode_ == Mode::exact) {
            const GaussRational& q = t.coeff.exact_value();
            os << "(" << q.re_string() << (q.im() >= 0 ? "+" : "") << q.im_string() << "i)";
        } else {
            os << t.coeff.to_complex();
        }
        os << "*x^" << t.deg.to_string();
    }
    return os.str();
}

double distance(const TruncatedSeries& a, const TruncatedSeries& b) {
    double m = 0.0;
    auto ai = a.terms().begin(), bi = b.terms().begin();
    while (ai != a.terms().end() || bi != b.terms().end()) {
        if (bi == b.terms().end() || (ai != a.terms().end() && ai->deg < bi->deg)) {
            m = std::max(m, ai->coeff.abs());
            ++ai;
        } else if (ai == a.terms().end() || bi->deg < ai->deg) {
            m = std::max(m, bi->coeff.abs());
            ++bi;
        } else {
            m = std::max(m, std::abs(ai->coeff.to_complex() - bi->coeff.to_complex()));
            ++ai;
            ++bi;
        }
    }
    return m;
}

}  // namespace foliation
