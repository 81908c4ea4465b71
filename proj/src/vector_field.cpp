#include "foliation/vector_field.hpp"

#include "foliation/jet_flow.hpp"

#include <algorithm>

namespace foliation {

VectorField::VectorField(std::vector<TruncatedSeries> components, bool allow_regular)
    : comps_(std::move(components)), allow_regular_(allow_regular) {
    if (comps_.empty()) throw DimensionError("vector field needs components");
    if (static_cast<int>(comps_.size()) != comps_[0].nvars())
        throw DimensionError("vector field component count must equal nvars");
    for (const auto& c : comps_) {
        comps_[0].require_compatible(c);
        if (!allow_regular_ && c.has_constant_term())
            throw ValidationError("vector field is not singular at the origin");
    }
}

VectorField VectorField::zero(int nvars, int cap, Mode mode) {
    return VectorField(std::vector<TruncatedSeries>(nvars, TruncatedSeries::zero(nvars, cap, mode)));
}

VectorField VectorField::diagonal(std::span<const long> lambda, int cap, Mode mode) {
    const int n = static_cast<int>(lambda.size());
    std::vector<TruncatedSeries> comps;
    comps.reserve(n);
    for (int j = 0; j < n; ++j) {
        Scalar c = mode == Mode::exact ? Scalar::exact_int(lambda[j])
                                       : Scalar::floating(static_cast<double>(lambda[j]));
        comps.push_back(TruncatedSeries::monomial(n, cap, Multidegree::unit(n, j), c));
    }
    return VectorField(std::move(comps));
}

bool VectorField::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(),
                       [](const TruncatedSeries& s) { return s.is_zero(); });
}

double VectorField::max_abs() const {
    double m = 0.0;
    for (const auto& c : comps_) m = std::max(m, c.max_abs());
    return m;
}

void VectorField::require_compatible(const VectorField& o) const {
    if (nvars() != o.nvars()) throw DimensionError("vector field arity mismatch");
    comps_[0].require_compatible(o.comps_[0]);
}

VectorField VectorField::operator+(const VectorField& o) const {
    require_compatible(o);
    std::vector<TruncatedSeries> comps;
    comps.reserve(comps_.size());
    for (std::size_t j = 0; j < comps_.size(); ++j) comps.push_back(comps_[j] + o.comps_[j]);
    return VectorField(std::move(comps), allow_regular_ || o.allow_regular_);
}

VectorField VectorField::operator-(const VectorField& o) const { return *this + (-o); }

VectorField VectorField::operator-() const {
    std::vector<TruncatedSeries> comps;
    comps.reserve(comps_.size());
    for (const auto& c : comps_) comps.push_back(-c);
    return VectorField(std::move(comps), allow_regular_);
}

VectorField VectorField::scaled(const Scalar& c) const {
    std::vector<TruncatedSeries> comps;
    comps.reserve(comps_.size());
    for (const auto& s : comps_) comps.push_back(s.scaled(c));
    return VectorField(std::move(comps), allow_regular_);
}

VectorField VectorField::multiplied_by(const TruncatedSeries& f) const {
    std::vector<TruncatedSeries> comps;
    comps.reserve(comps_.size());
    for (const auto& s : comps_) comps.push_back(s * f);
    return VectorField(std::move(comps), true);
}

bool operator==(const VectorField& a, const VectorField& b) { return a.comps_ == b.comps_; }

VectorField VectorField::to_float() const {
    std::vector<TruncatedSeries> comps;
    comps.reserve(comps_.size());
    for (const auto& c : comps_) comps.push_back(c.to_float());
    return VectorField(std::move(comps), allow_regular_);
}

VectorField VectorField::to_exact() const {
    std::vector<TruncatedSeries> comps;
    comps.reserve(comps_.size());
    for (const auto& c : comps_) comps.push_back(c.to_exact());
    return VectorField(std::move(comps), allow_regular_);
}

// --- FormalDiffeo ---

namespace {
ScalarMatrix extract_linear(const std::vector<TruncatedSeries>& comps) {
    const int n = static_cast<int>(comps.size());
    ScalarMatrix m(n, n, comps[0].mode());
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            m.at(j, i) = comps[j].coefficient(Multidegree::unit(comps[j].nvars(), i));
    return m;
}
}  // namespace

FormalDiffeo::FormalDiffeo(std::vector<TruncatedSeries> components)
    : comps_(std::move(components)), linear_(1, 1, Mode::exact) {
    if (comps_.empty()) throw DimensionError("diffeomorphism needs components");
    if (static_cast<int>(comps_.size()) != comps_[0].nvars())
        throw DimensionError("diffeomorphism component count must equal nvars");
    for (const auto& c : comps_) {
        comps_[0].require_compatible(c);
        if (c.has_constant_term())
            throw ValidationError("diffeomorphism components must vanish at the origin");
    }
    linear_ = extract_linear(comps_);
    if (linear_.det().is_zero())
        throw SingularMatrixError("diffeomorphism has singular linear part");
}

FormalDiffeo FormalDiffeo::identity(int nvars, int cap, Mode mode) {
    std::vector<TruncatedSeries> comps;
    comps.reserve(nvars);
    for (int j = 0; j < nvars; ++j) comps.push_back(TruncatedSeries::variable(nvars, cap, j, mode));
    return FormalDiffeo(std::move(comps));
}

FormalDiffeo FormalDiffeo::linear(const ScalarMatrix& m, int cap) {
    if (m.rows() != m.cols()) throw DimensionError("linear diffeomorphism needs a square matrix");
    const int n = m.rows();
    std::vector<TruncatedSeries> comps;
    comps.reserve(n);
    for (int j = 0; j < n; ++j) {
        TruncatedSeries s = TruncatedSeries::zero(n, cap, m.mode());
        for (int i = 0; i < n; ++i)
            s = s + TruncatedSeries::monomial(n, cap, Multidegree::unit(n, i), m.at(j, i));
        comps.push_back(std::move(s));
    }
    return FormalDiffeo(std::move(comps));
}

bool FormalDiffeo::is_identity() const {
    return *this == identity(nvars(), cap(), mode());
}

bool FormalDiffeo::is_tangent_to_identity() const {
    return linear_ == ScalarMatrix::identity(nvars(), mode());
}

TruncatedSeries FormalDiffeo::apply_to(const TruncatedSeries& f) const {
    return f.compose(comps_);
}

std::vector<std::complex<double>> FormalDiffeo::apply_to_point(
    std::span<const std::complex<double>> p) const {
    std::vector<std::complex<double>> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c.evaluate(p));
    return out;
}

FormalDiffeo FormalDiffeo::to_float() const {
    std::vector<TruncatedSeries> comps;
    comps.reserve(comps_.size());
    for (const auto& c : comps_) comps.push_back(c.to_float());
    return FormalDiffeo(std::move(comps));
}

bool operator==(const FormalDiffeo& a, const FormalDiffeo& b) { return a.comps_ == b.comps_; }

// --- operations ---

TruncatedSeries apply_derivation(const VectorField& x, const TruncatedSeries& f) {
    x.component(0).require_compatible(f);
    TruncatedSeries acc = TruncatedSeries::zero(f.nvars(), f.cap(), f.mode());
    for (int j = 0; j < x.nvars(); ++j) acc = acc + x.component(j) * f.derivative(j);
    return acc;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    x.require_compatible(y);
    std::vector<TruncatedSeries> comps;
    comps.reserve(x.nvars());
    for (int j = 0; j < x.nvars(); ++j)
        comps.push_back(apply_derivation(x, y.component(j)) -
                        apply_derivation(y, x.component(j)));
    return VectorField(std::move(comps), true);
}

ScalarMatrix linear_part(const VectorField& x) {
    const int n = x.nvars();
    ScalarMatrix m(n, n, x.mode());
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            m.at(j, i) = x.component(j).coefficient(Multidegree::unit(n, i));
    return m;
}

FormalDiffeo exp_formal(const VectorField& y) {
    for (const auto& c : y.components())
        if (c.has_constant_term())
            throw ValidationError("exp of a vector field with nonzero constant term");
    const bool zero_linear = linear_part(y).is_zero();
    if (!zero_linear) {
        if (y.mode() == Mode::exact)
            throw ModeError(
                "exact-mode exp requires a vanishing linear part (the Lie series must "
                "terminate); convert to float mode");
        return flow_time(y, 1.0);
    }
    // Lie series on the coordinate functions; each application of Y raises
    // the valuation, so the loop ends by cap+1 iterations
    const int n = y.nvars();
    const int cap = y.cap();
    std::vector<TruncatedSeries> comps;
    comps.reserve(n);
    for (int j = 0; j < n; ++j) {
        TruncatedSeries term = TruncatedSeries::variable(n, cap, j, y.mode());
        TruncatedSeries acc = term;
        for (int k = 1; k <= cap && !term.is_zero(); ++k) {
            term = apply_derivation(y, term);
            Scalar inv_k = y.mode() == Mode::exact
                               ? Scalar::exact_ratio(1, k)
                               : Scalar::floating(1.0 / static_cast<double>(k));
            term = term.scaled(inv_k);
            acc = acc + term;
        }
        comps.push_back(std::move(acc));
    }
    return FormalDiffeo(std::move(comps));
}

FormalDiffeo compose_diffeo(const FormalDiffeo& phi, const FormalDiffeo& psi) {
    if (phi.nvars() != psi.nvars()) throw DimensionError("composition arity mismatch");
    std::vector<TruncatedSeries> comps;
    comps.reserve(phi.nvars());
    for (int j = 0; j < phi.nvars(); ++j) comps.push_back(phi.component(j).compose(psi.components()));
    return FormalDiffeo(std::move(comps));
}

FormalDiffeo invert_diffeo(const FormalDiffeo& phi) {
    const int n = phi.nvars();
    const int cap = phi.cap();
    const Mode mode = phi.mode();
    ScalarMatrix linv = phi.linear_part().inverse();

    // higher-order part of phi
    std::vector<TruncatedSeries> higher;
    higher.reserve(n);
    const FormalDiffeo lin_phi = FormalDiffeo::linear(phi.linear_part(), cap);
    for (int j = 0; j < n; ++j) higher.push_back(phi.component(j) - lin_phi.component(j));

    // psi <- L^{-1} o (id - H o psi); gains one exact degree per pass
    FormalDiffeo psi = FormalDiffeo::linear(linv, cap);
    for (int pass = 1; pass < cap; ++pass) {
        std::vector<TruncatedSeries> next;
        next.reserve(n);
        for (int j = 0; j < n; ++j) {
            TruncatedSeries hj = higher[j].compose(psi.components());
            next.push_back(TruncatedSeries::variable(n, cap, j, mode) - hj);
        }
        // apply L^{-1} to the component tuple
        std::vector<TruncatedSeries> out;
        out.reserve(n);
        for (int j = 0; j < n; ++j) {
            TruncatedSeries s = TruncatedSeries::zero(n, cap, mode);
            for (int i = 0; i < n; ++i) {
                if (linv.at(j, i).is_zero()) continue;
                s = s + next[i].scaled(linv.at(j, i));
            }
            out.push_back(std::move(s));
        }
        FormalDiffeo cand(std::move(out));
        if (cand == psi) break;  // fixed point reached early
        psi = std::move(cand);
    }
    if (mode == Mode::exact && !compose_diffeo(phi, psi).is_identity())
        throw Error("inverse verification failed");
    return psi;
}

VectorField pushforward(const FormalDiffeo& phi, const VectorField& x) {
    if (phi.nvars() != x.nvars()) throw DimensionError("pushforward arity mismatch");
    phi.component(0).require_compatible(x.component(0));
    const int n = x.nvars();
    FormalDiffeo inv = invert_diffeo(phi);
    std::vector<TruncatedSeries> comps;
    comps.reserve(n);
    for (int j = 0; j < n; ++j) {
        // (D phi . X)_j = sum_i dphi_j/dx_i * X_i
        TruncatedSeries s = TruncatedSeries::zero(n, x.cap(), x.mode());
        for (int i = 0; i < n; ++i) s = s + phi.component(j).derivative(i) * x.component(i);
        comps.push_back(s.compose(inv.components()));
    }
    return VectorField(std::move(comps), x.allow_regular());
}

VectorField pushforward_bch(const VectorField& y, const VectorField& x) {
    y.require_compatible(x);
    if (!linear_part(y).is_zero())
        throw ValidationError("BCH pushforward needs a generator with vanishing linear part");
    VectorField acc = x;
    VectorField term = x;
    const int cap = x.cap();
    for (int k = 1; k <= cap && !term.is_zero(); ++k) {
        term = lie_bracket(y, term);
        Scalar inv_k = x.mode() == Mode::exact ? Scalar::exact_ratio(1, k)
                                               : Scalar::floating(1.0 / static_cast<double>(k));
        term = term.scaled(inv_k);
        acc = acc + term;
    }
    return acc;
}

double distance(const VectorField& a, const VectorField& b) {
    a.require_compatible(b);
    double m = 0.0;
    for (int j = 0; j < a.nvars(); ++j)
        m = std::max(m, distance(a.component(j), b.component(j)));
    return m;
}

double distance(const FormalDiffeo& a, const FormalDiffeo& b) {
    double m = 0.0;
    for (int j = 0; j < a.nvars(); ++j)
        m = std::max(m, distance(a.component(j), b.component(j)));
    return m;
}

}  // namespace foliation
