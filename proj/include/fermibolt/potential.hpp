#pragma once

#include <utility>
#include <vector>

#include "fermibolt/core.hpp"

namespace fermibolt {

// Fourier coefficients Vhat of the two-body potential: real, even, Vhat(0)=0,
// compactly supported in |k| <= radius. Only nonzero entries are stored; the
// support list is kept lexicographically sorted so every k-sum has a fixed
// deterministic order.
class Potential {
public:
    Potential() = default;

    // Vhat = amplitude on 0 < |k| <= radius, zero elsewhere. Rotationally
    // symmetric with positive axis values, so it also satisfies the stronger
    // lower-bound condition used by the fixed-volume experiments.
    static Potential indicator(int d, double amplitude, int radius);

    // Explicit table; entries are validated (evenness, zero mean, support).
    static Potential from_entries(int d, int radius, std::vector<std::pair<Vec3, double>> entries);

    double value(const Vec3& k) const;
    const std::vector<std::pair<Vec3, double>>& support() const { return support_; }
    int radius() const { return radius_; }
    double l1_raw() const { return l1_raw_; }  // sum of |Vhat(k)| without measure factors
    double linf() const { return linf_; }

    // True when Vhat depends only on |k|^2 and Vhat(0,...,0,m) > 0 for
    // 1 <= m <= radius (the k = 0 value is exempt: it must vanish).
    bool is_rotationally_positive(int d) const;

private:
    int radius_ = 0;
    std::vector<std::pair<Vec3, double>> support_;  // lex-sorted, nonzero values
    double l1_raw_ = 0.0;
    double linf_ = 0.0;

    void validate(int d) const;
    void finish();
};

}  // namespace fermibolt
