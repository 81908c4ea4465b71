#include "foliation/jet_flow.hpp"

#include "foliation/ode.hpp"

#include <algorithm>
#include <map>

namespace foliation {

namespace {
void enumerate(int nvars, int cap, int pos, std::vector<int>& cur, int used,
               std::vector<Multidegree>& out) {
    if (pos == nvars) {
        out.push_back(Multidegree(cur));
        return;
    }
    for (int e = 0; e + used <= cap; ++e) {
        cur[pos] = e;
        enumerate(nvars, cap, pos + 1, cur, used + e, out);
    }
    cur[pos] = 0;
}
}  // namespace

JetBasis::JetBasis(int nvars, int cap) : nvars_(nvars), cap_(cap) {
    std::vector<int> cur(nvars, 0);
    enumerate(nvars, cap, 0, cur, 0, monomials_);
    std::sort(monomials_.begin(), monomials_.end());
}

int JetBasis::index_of(const Multidegree& d) const {
    auto it = std::lower_bound(monomials_.begin(), monomials_.end(), d);
    if (it == monomials_.end() || !(*it == d)) throw DimensionError("monomial outside jet basis");
    return static_cast<int>(it - monomials_.begin());
}

CVec JetBasis::coefficients(const TruncatedSeries& s) const {
    CVec v(monomials_.size(), 0.0);
    for (const auto& t : s.terms()) v[index_of(t.deg)] = t.coeff.to_complex();
    return v;
}

TruncatedSeries JetBasis::series(const CVec& coeffs, Mode mode) const {
    std::vector<TruncatedSeries::Term> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0.0) continue;
        terms.push_back({monomials_[i], mode == Mode::floating
                                            ? Scalar::floating(coeffs[i])
                                            : throw ModeError("jet basis emits float series")});
    }
    return TruncatedSeries::from_terms(nvars_, cap_, mode, std::move(terms));
}

namespace {

// sparse row-compressed derivation operator f -> t * Y(f) on the jet basis
struct SparseOp {
    struct Entry {
        int col;
        std::complex<double> val;
    };
    std::vector<std::vector<Entry>> rows;

    void apply(const CVec& v, CVec& out) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::complex<double> acc = 0.0;
            for (const Entry& e : rows[r]) acc += e.val * v[e.col];
            out[r] = acc;
        }
    }
};

SparseOp derivation_operator(const VectorField& y, std::complex<double> t,
                             const JetBasis& basis) {
    const int n = y.nvars();
    const int cap = y.cap();
    std::vector<std::map<int, std::complex<double>>> rows(basis.size());
    for (int m = 0; m < basis.size(); ++m) {
        const Multidegree& d = basis.monomial(m);
        for (int i = 0; i < n; ++i) {
            int e = d[i];
            if (e == 0) continue;
            Multidegree dm = d.bump(i, -1);
            for (const auto& term : y.component(i).terms()) {
                Multidegree target = dm.plus(term.deg);
                if (target.total() > cap) continue;
                rows[basis.index_of(target)][m] +=
                    t * static_cast<double>(e) * term.coeff.to_complex();
            }
        }
    }
    SparseOp op;
    op.rows.resize(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) op.rows[r].push_back({c, v});
    return op;
}

}  // namespace

FormalDiffeo flow_time(const VectorField& y, std::complex<double> t, double rtol) {
    if (y.mode() != Mode::floating) throw ModeError("jet flow runs in float mode");
    const int n = y.nvars();
    const int cap = y.cap();
    JetBasis basis(n, cap);
    SparseOp op = derivation_operator(y, t, basis);

    // integrate all n coordinate functions as one stacked state
    const int m = basis.size();
    CVec state(static_cast<std::size_t>(n) * m, 0.0);
    for (int j = 0; j < n; ++j)
        state[static_cast<std::size_t>(j) * m +
              basis.index_of(Multidegree::unit(n, j))] = 1.0;

    CVec block(m), dblock(m);
    auto rhs = [&](double, const CVec& v, CVec& dv) {
        for (int j = 0; j < n; ++j) {
            std::copy(v.begin() + static_cast<std::ptrdiff_t>(j) * m,
                      v.begin() + static_cast<std::ptrdiff_t>(j + 1) * m, block.begin());
            op.apply(block, dblock);
            std::copy(dblock.begin(), dblock.end(),
                      dv.begin() + static_cast<std::ptrdiff_t>(j) * m);
        }
    };
    OdeOptions opts;
    opts.rtol = rtol;
    opts.atol = rtol * 0.01;
    OdeStatus st = integrate_ode(rhs, 0.0, 1.0, state, opts);
    if (st != OdeStatus::done) throw Error("jet flow integration failed");

    std::vector<TruncatedSeries> comps;
    comps.reserve(n);
    for (int j = 0; j < n; ++j) {
        CVec coeffs(state.begin() + static_cast<std::ptrdiff_t>(j) * m,
                    state.begin() + static_cast<std::ptrdiff_t>(j + 1) * m);
        // scrub integration dust below the meaningful scale so that exact
        // structural zeros (e.g. axis invariance) stay zero
        for (auto& c : coeffs)
            if (std::abs(c) < 1e-300) c = 0.0;
        comps.push_back(basis.series(coeffs, Mode::floating));
    }
    return FormalDiffeo(std::move(comps));
}

}  // namespace foliation
