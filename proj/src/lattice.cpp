#include "fermibolt/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace fermibolt {

bool LatticeContext::in_shell(const Vec3& p, int n) const {
    if (n < 1) throw std::invalid_argument("in_shell: n must be >= 1");
    double nr = static_cast<double>(n) * r;
    double hi = p_F + nr;
    auto p2 = static_cast<double>(p.norm2());
    if (p2 > hi * hi) return false;
    double lo = p_F - nr;
    if (lo <= 0.0) return true;
    return p2 >= lo * lo;
}

std::int64_t disk_count(std::int64_t m) {
    if (m < 0) return 0;
    std::int64_t s = isqrt64(m);
    std::int64_t total = 0;
    for (std::int64_t x = -s; x <= s; ++x) total += 2 * isqrt64(m - x * x) + 1;
    return total;
}

std::int64_t fermi_count(int d, double p_F) {
    if (p_F <= 0.0) throw std::invalid_argument("fermi_count: p_F must be > 0");
    double p2 = p_F * p_F;
    auto bound = static_cast<std::int64_t>(std::floor(p2));
    auto row = static_cast<std::int64_t>(std::floor(p_F));
    switch (d) {
        case 1:
            return 2 * row + 1;
        case 2:
            return disk_count(bound);
        case 3: {
            std::int64_t total = 0;
            for (std::int64_t z = -row; z <= row; ++z) total += disk_count(bound - z * z);
            return total;
        }
        default:
            throw std::invalid_argument("fermi_count: d must be 1, 2 or 3");
    }
}

LatticeContext make_context(int d, double p_F, int r) {
    if (d < 1 || d > 3) throw std::invalid_argument("make_context: d must be 1, 2 or 3");
    if (p_F <= 0.0) throw std::invalid_argument("make_context: p_F must be > 0");
    if (r < 1) throw std::invalid_argument("make_context: r must be >= 1");
    LatticeContext ctx;
    ctx.d = d;
    ctx.p_F = p_F;
    ctx.r = r;
    ctx.p_F2 = p_F * p_F;
    ctx.N = fermi_count(d, p_F);
    ctx.volume = std::pow(kTwoPi, d);
    ctx.R = ctx.volume * std::pow(p_F, d - 1);
    return ctx;
}

void for_each_in_box(int d, int lo, int hi, const std::function<void(const Vec3&)>& fn) {
    Vec3 p;
    int lo1 = d >= 2 ? lo : 0, hi1 = d >= 2 ? hi : 0;
    int lo2 = d >= 3 ? lo : 0, hi2 = d >= 3 ? hi : 0;
    for (int x = lo; x <= hi; ++x) {
        p[0] = x;
        for (int y = lo1; y <= hi1; ++y) {
            p[1] = y;
            for (int z = lo2; z <= hi2; ++z) {
                p[2] = z;
                fn(p);
            }
        }
    }
}

double convolve_with_chi(const LatticeContext& ctx, const Potential& pot, const Vec3& p,
                         ChiSide side, const Normalization& norm) {
    double acc = 0.0;
    for (const auto& [k, v] : pot.support()) {
        Vec3 q = p - k;
        int ind = side == ChiSide::inside ? ctx.chi(q) : ctx.chi_perp(q);
        acc += v * static_cast<double>(ind);
    }
    return norm.measure(ctx.d) * acc;
}

double dispersion_E(const LatticeContext& ctx, const Potential& pot, double lambda, const Vec3& p,
                    const Normalization& norm) {
    double kin = 0.5 * static_cast<double>(p.norm2());
    if (ctx.in_ball(p)) {
        double corr = lambda == 0.0 ? 0.0 : convolve_with_chi(ctx, pot, p, ChiSide::outside, norm);
        return -(kin + 0.5 * lambda * corr);
    }
    double corr = lambda == 0.0 ? 0.0 : convolve_with_chi(ctx, pot, p, ChiSide::inside, norm);
    return kin - 0.5 * lambda * corr;
}

std::int64_t free_energy_2e(const LatticeContext& ctx, const Vec3& p) {
    std::int64_t p2 = p.norm2();
    return ctx.in_ball(p) ? -p2 : p2;
}

double free_energy_e(const LatticeContext& ctx, const Vec3& p) {
    return 0.5 * static_cast<double>(free_energy_2e(ctx, p));
}

}  // namespace fermibolt
