#ifndef FOLIATION_MULTIDEGREE_HPP
#define FOLIATION_MULTIDEGREE_HPP

#include "foliation/errors.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace foliation {

// Exponent vector (k_1,...,k_n) with cached total degree. Canonical order is
// total degree first, then ascending lexicographic on the exponents; every
// container in the library iterates in this order.
class Multidegree {
public:
    explicit Multidegree(std::vector<int> exps)
        : exps_(std::move(exps)), total_(std::accumulate(exps_.begin(), exps_.end(), 0)) {
        for (int e : exps_)
            if (e < 0) throw ValidationError("negative exponent in multidegree");
    }

    static Multidegree zero(int nvars) { return Multidegree(std::vector<int>(nvars, 0)); }
    static Multidegree unit(int nvars, int j) {
        std::vector<int> e(nvars, 0);
        e.at(j) = 1;
        return Multidegree(std::move(e));
    }

    int nvars() const { return static_cast<int>(exps_.size()); }
    int total() const { return total_; }
    int operator[](int j) const { return exps_[j]; }
    const std::vector<int>& exponents() const { return exps_; }

    Multidegree plus(const Multidegree& o) const {
        std::vector<int> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
        return Multidegree(std::move(e));
    }
    // componentwise difference; caller must know it is non-negative
    Multidegree minus(const Multidegree& o) const {
        std::vector<int> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.exps_[i];
        return Multidegree(std::move(e));
    }
    bool dominates(const Multidegree& o) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] < o.exps_[i]) return false;
        return true;
    }

    Multidegree bump(int j, int delta) const {
        std::vector<int> e(exps_);
        e.at(j) += delta;
        return Multidegree(std::move(e));
    }

    // drops variable j (used when restricting to a transversal)
    Multidegree without_var(int j) const {
        std::vector<int> e;
        e.reserve(exps_.size() - 1);
        for (int i = 0; i < nvars(); ++i)
            if (i != j) e.push_back(exps_[i]);
        return Multidegree(std::move(e));
    }
    // inserts variable j with exponent 0
    Multidegree with_var(int j) const {
        std::vector<int> e;
        e.reserve(exps_.size() + 1);
        for (int i = 0; i <= nvars(); ++i) {
            if (i == j)
                e.push_back(0);
            if (i < nvars()) e.push_back(exps_[i]);
        }
        return Multidegree(std::move(e));
    }

    friend bool operator==(const Multidegree& a, const Multidegree& b) {
        return a.total_ == b.total_ && a.exps_ == b.exps_;
    }
    friend std::strong_ordering operator<=>(const Multidegree& a, const Multidegree& b) {
        if (a.total_ != b.total_) return a.total_ <=> b.total_;
        return a.exps_ <=> b.exps_;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(exps_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> exps_;
    int total_;
};

}  // namespace foliation

#endif
