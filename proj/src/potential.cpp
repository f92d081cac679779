#include "fermibolt/potential.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "fermibolt/lattice.hpp"

namespace fermibolt {

Potential Potential::indicator(int d, double amplitude, int radius) {
    if (radius < 1) throw std::invalid_argument("Potential::indicator: radius must be >= 1");
    std::vector<std::pair<Vec3, double>> entries;
    std::int64_t r2 = static_cast<std::int64_t>(radius) * radius;
    for_each_in_box(d, -radius, radius, [&](const Vec3& k) {
        if (!k.is_zero() && k.norm2() <= r2 && amplitude != 0.0) entries.emplace_back(k, amplitude);
    });
    Potential pot;
    pot.radius_ = radius;
    pot.support_ = std::move(entries);
    pot.validate(d);
    pot.finish();
    return pot;
}

Potential Potential::from_entries(int d, int radius, std::vector<std::pair<Vec3, double>> entries) {
    if (radius < 1) throw std::invalid_argument("Potential::from_entries: radius must be >= 1");
    std::erase_if(entries, [](const auto& e) { return e.second == 0.0; });
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].first == entries[i - 1].first)
            throw std::invalid_argument("Potential: duplicate entry for the same k");
    Potential pot;
    pot.radius_ = radius;
    pot.support_ = std::move(entries);
    pot.validate(d);
    pot.finish();
    return pot;
}

void Potential::validate(int d) const {
    std::int64_t r2 = static_cast<std::int64_t>(radius_) * radius_;
    for (const auto& [k, v] : support_) {
        for (int i = d; i < 3; ++i)
            if (k[i] != 0) throw std::invalid_argument("Potential: entry uses more than d coordinates");
        if (k.is_zero()) throw std::invalid_argument("Potential: Vhat(0) must vanish");
        if (k.norm2() > r2) throw std::invalid_argument("Potential: entry outside the support ball");
        if (value(-k) != v) throw std::invalid_argument("Potential: Vhat must be even");
        (void)v;
    }
}

void Potential::finish() {
    l1_raw_ = 0.0;
    linf_ = 0.0;
    for (const auto& [k, v] : support_) {
        (void)k;
        l1_raw_ += std::abs(v);
        linf_ = std::max(linf_, std::abs(v));
    }
}

double Potential::value(const Vec3& k) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), k,
                               [](const auto& e, const Vec3& key) { return e.first < key; });
    if (it != support_.end() && it->first == k) return it->second;
    return 0.0;
}

bool Potential::is_rotationally_positive(int d) const {
    std::map<std::int64_t, double> by_norm;
    for (const auto& [k, v] : support_) {
        auto [it, inserted] = by_norm.emplace(k.norm2(), v);
        if (!inserted && it->second != v) return false;
    }
    // Full rotational symmetry also requires that lattice points of equal norm
    // never split between zero and nonzero values.
    std::int64_t r2 = static_cast<std::int64_t>(radius_) * radius_;
    bool symmetric = true;
    for_each_in_box(d, -radius_, radius_, [&](const Vec3& k) {
        if (k.is_zero() || k.norm2() > r2) return;
        auto it = by_norm.find(k.norm2());
        double expect = it == by_norm.end() ? 0.0 : it->second;
        if (value(k) != expect) symmetric = false;
    });
    if (!symmetric) return false;
    for (int m = 1; m <= radius_; ++m) {
        Vec3 axis = d == 3 ? Vec3{0, 0, m} : (d == 2 ? Vec3{0, m, 0} : Vec3{m, 0, 0});
        if (value(axis) <= 0.0) return false;
    }
    return true;
}

}  // namespace fermibolt
