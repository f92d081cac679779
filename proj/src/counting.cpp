#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fermibolt/bosonization.hpp"

namespace fermibolt {

namespace {

void require_d3(const LatticeContext& ctx, const char* who) {
    if (ctx.d != 3) throw std::invalid_argument(std::string(who) + ": requires d = 3");
}

// Count of x in Z^2 with lo < |x|^2 <= hi for real bounds.
std::int64_t annulus_count(double lo, double hi) {
    if (!(hi >= 0.0) || lo >= hi) return 0;
    auto hi_i = static_cast<std::int64_t>(std::floor(hi));
    std::int64_t lo_i = lo < 0.0 ? -1 : static_cast<std::int64_t>(std::floor(lo));
    return disk_count(hi_i) - disk_count(lo_i);
}

int single_axis(const Vec3& k) {
    int axis = -1;
    for (int i = 0; i < 3; ++i) {
        if (k[i] != 0) {
            if (axis >= 0) return -1;
            axis = i;
        }
    }
    return axis;
}

}  // namespace

std::int64_t counting_N(const LatticeContext& ctx, const Vec3& q, const Vec3& k) {
    require_d3(ctx, "counting_N");
    if (k.is_zero()) throw std::invalid_argument("counting_N: k must be nonzero");
    std::int64_t qk = q.dot(k);
    std::int64_t k2 = k.norm2();
    // Shell necessary condition: -k^2/2 < q.k <= p_F |k|.
    if (2 * qk + k2 <= 0) return 0;
    if (qk > 0 && static_cast<double>(qk) * static_cast<double>(qk) >
                      ctx.p_F2 * static_cast<double>(k2))
        return 0;

    int axis = single_axis(k);
    if (axis >= 0) {
        // r.k = q.k pins the axis coordinate to q[axis]; the slice is the
        // 2D annulus p_F^2 - (q3+m)^2 < |x|^2 <= p_F^2 - q3^2.
        double q3 = q[axis];
        double m = k[axis];
        return annulus_count(ctx.p_F2 - (q3 + m) * (q3 + m), ctx.p_F2 - q3 * q3);
    }
    return counting_N_plane(ctx, q, k);
}

std::int64_t counting_N_plane(const LatticeContext& ctx, const Vec3& q, const Vec3& k) {
    require_d3(ctx, "counting_N_plane");
    if (k.is_zero()) throw std::invalid_argument("counting_N_plane: k must be nonzero");
    int piv = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(k[i]) > std::abs(k[piv])) piv = i;
    int a = (piv + 1) % 3, b = (piv + 2) % 3;
    auto M = static_cast<int>(std::floor(ctx.p_F));
    std::int64_t qk = q.dot(k);
    std::int64_t count = 0;
    for (int xa = -M; xa <= M; ++xa) {
        for (int xb = -M; xb <= M; ++xb) {
            std::int64_t rest = qk - static_cast<std::int64_t>(xa) * k[a] -
                                static_cast<std::int64_t>(xb) * k[b];
            if (rest % k[piv] != 0) continue;
            std::int64_t xp = rest / k[piv];
            if (xp < -M || xp > M) continue;
            Vec3 r;
            r[a] = xa;
            r[b] = xb;
            r[piv] = static_cast<int>(xp);
            if (ctx.in_ball(r) && !ctx.in_ball(r + k)) ++count;
        }
    }
    return count;
}

std::int64_t counting_N_brute(const LatticeContext& ctx, const Vec3& q, const Vec3& k) {
    require_d3(ctx, "counting_N_brute");
    if (k.is_zero()) throw std::invalid_argument("counting_N_brute: k must be nonzero");
    auto M = static_cast<int>(std::floor(ctx.p_F));
    std::int64_t qk = q.dot(k);
    std::int64_t count = 0;
    for_each_in_box(3, -M, M, [&](const Vec3& r) {
        if (ctx.in_ball(r) && !ctx.in_ball(r + k) && r.dot(k) == qk) ++count;
    });
    return count;
}

GaussCircle gauss_circle(std::int64_t r2) {
    if (r2 < 0) throw std::invalid_argument("gauss_circle: r2 must be >= 0");
    GaussCircle out;
    out.count = disk_count(r2);
    out.remainder = static_cast<double>(out.count) - kPi * static_cast<double>(r2);
    return out;
}

std::int64_t lune_cardinality(const LatticeContext& ctx, const Vec3& k) {
    require_d3(ctx, "lune_cardinality");
    if (k.is_zero()) throw std::invalid_argument("lune_cardinality: k must be nonzero");
    int axis = single_axis(k);
    auto M = static_cast<int>(std::floor(ctx.p_F));
    if (axis >= 0) {
        double m = k[axis];
        std::int64_t total = 0;
        for (int z = -M; z <= M; ++z)
            total += annulus_count(ctx.p_F2 - (z + m) * (z + m),
                                   ctx.p_F2 - static_cast<double>(z) * z);
        return total;
    }
    return lune_cardinality_brute(ctx, k);
}

std::int64_t lune_cardinality_brute(const LatticeContext& ctx, const Vec3& k) {
    require_d3(ctx, "lune_cardinality_brute");
    if (k.is_zero()) throw std::invalid_argument("lune_cardinality_brute: k must be nonzero");
    auto M = static_cast<int>(std::floor(ctx.p_F));
    std::int64_t count = 0;
    for_each_in_box(3, -M, M, [&](const Vec3& r) {
        if (ctx.in_ball(r) && !ctx.in_ball(r + k)) ++count;
    });
    return count;
}

}  // namespace fermibolt
