#pragma once

#include <array>
#include <atomic>
#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

namespace fermibolt {

inline constexpr const char* kEngineVersion = "0.1.0";

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Lattice momentum on Z^d, d <= 3. Unused trailing coordinates stay zero, so
// the same type serves d = 1, 2, 3. Comparison is lexicographic; that order is
// the canonical enumeration order everywhere (it's what makes the optimized
// evaluators bit-identical to the brute-force oracles in serial mode).
struct Vec3 {
    std::array<int, 3> c{0, 0, 0};

    constexpr Vec3() = default;
    constexpr Vec3(int x, int y, int z) : c{x, y, z} {}

    constexpr int operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    constexpr int& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

    friend constexpr Vec3 operator+(const Vec3& a, const Vec3& b) {
        return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]};
    }
    friend constexpr Vec3 operator-(const Vec3& a, const Vec3& b) {
        return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2]};
    }
    friend constexpr Vec3 operator-(const Vec3& a) { return {-a.c[0], -a.c[1], -a.c[2]}; }

    constexpr std::int64_t norm2() const {
        return static_cast<std::int64_t>(c[0]) * c[0] + static_cast<std::int64_t>(c[1]) * c[1] +
               static_cast<std::int64_t>(c[2]) * c[2];
    }
    constexpr std::int64_t dot(const Vec3& o) const {
        return static_cast<std::int64_t>(c[0]) * o.c[0] + static_cast<std::int64_t>(c[1]) * o.c[1] +
               static_cast<std::int64_t>(c[2]) * o.c[2];
    }
    constexpr bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }

    friend constexpr auto operator<=>(const Vec3&, const Vec3&) = default;
};

using Momentum = Vec3;

struct Vec3Hash {
    std::size_t operator()(const Vec3& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int x : v.c) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Normalization ledger. The continuum-style integrals and deltas of the
// operator definitions translate, in the fixed box L = 2pi, as
//     int dp      -> (2pi)^{-d} * sum_p          (one "measure" factor)
//     delta(p-q)  -> (2pi)^{d}  * delta_{p,q}
// so after resolving all momentum deltas analytically each operator carries a
// fixed net power of (2pi) per remaining free lattice sum:
//     convolution, alpha : measure^1
//     Q_t, Q-sharp       : pi  * measure^2  (two free sums)
//     B_t, B-sharp       : 2pi * measure^2  (k-sum and r-sum)
// Raw mode sets measure = 1; every structural invariant (conservation,
// symmetry, oracle equality, slope tests) is homogeneous under that choice.
//
// The Kronecker coefficient kappa replaces delta_t at exact resonance in the
// sharp operators. "consistent" uses kappa = delta1(0) = 1/(2pi), the value
// the implemented kernel actually attains, so Q_t[f] -> t*Qsharp[f] is an
// exact internal limit. "paper" uses 2/pi, which changes absolute scales only.
enum class SumMode { ledger, raw };
enum class DeltaConvention { consistent, paper };

struct Normalization {
    SumMode mode = SumMode::ledger;
    DeltaConvention convention = DeltaConvention::consistent;

    double measure(int d) const {
        if (mode == SumMode::raw) return 1.0;
        double u = 1.0;
        for (int i = 0; i < d; ++i) u /= kTwoPi;
        return u;
    }
    double kappa() const { return convention == DeltaConvention::consistent ? 1.0 / kTwoPi : 2.0 / kPi; }
};

// Round-trip-safe decimal formatting shared by all writers, so that reruns of
// the same binary are byte-identical.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Work-stealing loop over [0, n). jobs <= 1 runs inline. Bodies must only
// write to their own index's slot; per-index results do not depend on the
// thread that computed them, so parallel output equals serial output.
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            body(i);
        }
    };
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
    if (hw > 0) nthreads = std::min<std::size_t>(nthreads, hw);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// isqrt on int64: largest s >= 0 with s*s <= m (m >= 0).
inline std::int64_t isqrt64(std::int64_t m) {
    if (m < 0) return -1;
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
    while (s > 0 && s * s > m) --s;
    while ((s + 1) * (s + 1) <= m) ++s;
    return s;
}

}  // namespace fermibolt
