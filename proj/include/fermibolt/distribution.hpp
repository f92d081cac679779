#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "fermibolt/core.hpp"

namespace fermibolt {

// Sparse occupation function f : Z^d -> [0,1]. Absent momenta read as 0;
// the complement 1 - f is evaluated lazily and never materialized. Keys are
// kept in lexicographic order so iteration is deterministic.
class Distribution {
public:
    double at(const Vec3& p) const {
        auto it = vals_.find(p);
        return it == vals_.end() ? 0.0 : it->second;
    }
    double tilde(const Vec3& p) const { return 1.0 - at(p); }

    void set(const Vec3& p, double v) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("Distribution: occupation must lie in [0,1]");
        if (v == 0.0)
            vals_.erase(p);
        else
            vals_[p] = v;
    }

    bool empty() const { return vals_.empty(); }
    std::size_t size() const { return vals_.size(); }
    const std::map<Vec3, double>& entries() const { return vals_; }

    // Support, sorted lexicographically.
    std::vector<Vec3> support() const {
        std::vector<Vec3> out;
        out.reserve(vals_.size());
        for (const auto& [p, v] : vals_) {
            (void)v;
            out.push_back(p);
        }
        return out;
    }

    // n = |Lambda| int f dp = sum_p f(p), the excitation count.
    double raw_total() const {
        double s = 0.0;
        for (const auto& [p, v] : vals_) {
            (void)p;
            s += v;
        }
        return s;
    }

    friend bool operator==(const Distribution&, const Distribution&) = default;

private:
    std::map<Vec3, double> vals_;
};

}  // namespace fermibolt
