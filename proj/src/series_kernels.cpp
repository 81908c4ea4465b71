#include "foliation/series.hpp"
#include "foliation/threading.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace foliation {

namespace {

// Multidegrees with nvars <= 7 and totals <= 255 pack into a uint64 with the
// total in the top byte and exponents big-endian below it; unsigned compare
// then matches the canonical (total, lex) order and key addition is exact
// because no byte can carry (totals of factors stay <= cap <= 255/2).
constexpr int kMaxPackedVars = 7;

std::uint64_t pack(const Multidegree& d) {
    std::uint64_t key = static_cast<std::uint64_t>(d.total()) << 56;
    for (int i = 0; i < d.nvars(); ++i)
        key |= static_cast<std::uint64_t>(d[i]) << (8 * (6 - i));
    return key;
}

Multidegree unpack(std::uint64_t key, int nvars) {
    std::vector<int> e(nvars);
    for (int i = 0; i < nvars; ++i) e[i] = static_cast<int>((key >> (8 * (6 - i))) & 0xff);
    return Multidegree(std::move(e));
}

struct KeyedTerm {
    std::uint64_t key;
    Scalar coeff;
};

// multiplies the a-term range [lo, hi) against all of b, accumulating in
// (i-major, j-minor) order; the caller owns slicing and merging
void accumulate_block(const std::vector<TruncatedSeries::Term>& a,
                      const std::vector<TruncatedSeries::Term>& b,
                      const std::vector<std::uint64_t>& akeys,
                      const std::vector<std::uint64_t>& bkeys, std::size_t lo, std::size_t hi,
                      std::uint64_t cap_key, std::vector<KeyedTerm>& out) {
    std::vector<KeyedTerm> prods;
    prods.reserve((hi - lo) * b.size());
    for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t key = akeys[i] + bkeys[j];
            if (key > cap_key) continue;  // total degree beyond the cap
            prods.push_back({key, a[i].coeff * b[j].coeff});
        }
    }
    std::stable_sort(prods.begin(), prods.end(),
                     [](const KeyedTerm& x, const KeyedTerm& y) { return x.key < y.key; });
    out.clear();
    for (auto& p : prods) {
        if (!out.empty() && out.back().key == p.key)
            out.back().coeff += p.coeff;
        else
            out.push_back(std::move(p));
    }
}

TruncatedSeries from_keyed(int nvars, int cap, Mode mode, std::vector<KeyedTerm>& acc) {
    std::vector<TruncatedSeries::Term> terms;
    terms.reserve(acc.size());
    for (auto& kt : acc) {
        if (kt.coeff.is_zero()) continue;
        terms.push_back({unpack(kt.key, nvars), std::move(kt.coeff)});
    }
    return TruncatedSeries::from_terms(nvars, cap, mode, std::move(terms));
}

// generic path for nvars > 7: same slice/merge structure, map-based keys
void accumulate_block_generic(const std::vector<TruncatedSeries::Term>& a,
                              const std::vector<TruncatedSeries::Term>& b, std::size_t lo,
                              std::size_t hi, int cap,
                              std::map<Multidegree, Scalar>& out) {
    for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (a[i].deg.total() + b[j].deg.total() > cap) continue;
            Multidegree d = a[i].deg.plus(b[j].deg);
            Scalar p = a[i].coeff * b[j].coeff;
            auto [it, fresh] = out.try_emplace(std::move(d), p);
            if (!fresh) it->second += p;
        }
    }
}

}  // namespace

TruncatedSeries mul_serial(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_compatible(b);
    std::map<Multidegree, Scalar> acc;
    accumulate_block_generic(a.terms(), b.terms(), 0, a.terms().size(), a.cap(), acc);
    std::vector<TruncatedSeries::Term> terms;
    terms.reserve(acc.size());
    for (auto& [d, c] : acc)
        if (!c.is_zero()) terms.push_back({d, std::move(c)});
    return TruncatedSeries::from_terms(a.nvars(), a.cap(), a.mode(), std::move(terms));
}

TruncatedSeries mul_sliced(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_compatible(b);
    const auto& at = a.terms();
    const auto& bt = b.terms();
    if (at.empty() || bt.empty()) return TruncatedSeries::zero(a.nvars(), a.cap(), a.mode());

    if (a.nvars() > kMaxPackedVars || a.cap() > 127) {
        // packed keys would overflow a byte; exactness does not depend on
        // the slice structure, so fall back to the plain kernel
        return mul_serial(a, b);
    }

    std::vector<std::uint64_t> akeys(at.size()), bkeys(bt.size());
    for (std::size_t i = 0; i < at.size(); ++i) akeys[i] = pack(at[i].deg);
    for (std::size_t j = 0; j < bt.size(); ++j) bkeys[j] = pack(bt[j].deg);
    const std::uint64_t cap_key = (static_cast<std::uint64_t>(a.cap() + 1) << 56) - 1;

    // slice count depends only on the input, never on the thread count, so
    // float accumulation order (and hence every bit of the result) is stable
    const std::size_t nslices = std::min<std::size_t>(at.size(), 64);
    std::vector<std::vector<KeyedTerm>> partial(nslices);
    const std::size_t chunk = (at.size() + nslices - 1) / nslices;

    const std::size_t work = at.size() * bt.size();
#pragma omp parallel for schedule(dynamic) num_threads(max_threads()) if (work > 4096)
    for (std::size_t s = 0; s < nslices; ++s) {
        std::size_t lo = s * chunk;
        std::size_t hi = std::min(at.size(), lo + chunk);
        if (lo < hi) accumulate_block(at, bt, akeys, bkeys, lo, hi, cap_key, partial[s]);
    }

    // in-order merge of the slice results
    std::vector<KeyedTerm> acc;
    for (std::size_t s = 0; s < nslices; ++s) {
        if (partial[s].empty()) continue;
        if (acc.empty()) {
            acc = std::move(partial[s]);
            continue;
        }
        std::vector<KeyedTerm> merged;
        merged.reserve(acc.size() + partial[s].size());
        auto x = acc.begin();
        auto y = partial[s].begin();
        while (x != acc.end() || y != partial[s].end()) {
            if (y == partial[s].end() || (x != acc.end() && x->key < y->key)) {
                merged.push_back(std::move(*x++));
            } else if (x == acc.end() || y->key < x->key) {
                merged.push_back(std::move(*y++));
            } else {
                x->coeff += y->coeff;
                merged.push_back(std::move(*x));
                ++x;
                ++y;
            }
        }
        acc = std::move(merged);
    }
    return from_keyed(a.nvars(), a.cap(), a.mode(), acc);
}

}  // namespace foliation
