#pragma once

#include <cstdint>
#include <functional>

#include "fermibolt/core.hpp"
#include "fermibolt/potential.hpp"

namespace fermibolt {

// Momentum-lattice geometry for the box of side L = 2pi, whose dual lattice
// is Z^d. The Fermi ball is the closed ball |p| <= p_F; all membership tests
// compare the integer |p|^2 against the cached double p_F^2, which is exact
// for every p_F used here.
struct LatticeContext {
    int d = 3;           // spatial dimension, 1..3
    double p_F = 0.0;    // Fermi momentum, > 0
    int r = 1;           // support radius of the interaction potential
    double p_F2 = 0.0;   // p_F * p_F
    std::int64_t N = 0;  // |B|, number of lattice points with |p| <= p_F
    double volume = 0.0; // |Lambda| = (2pi)^d
    double R = 0.0;      // |Lambda| * p_F^{d-1}

    bool in_ball(const Vec3& p) const { return static_cast<double>(p.norm2()) <= p_F2; }
    int chi(const Vec3& p) const { return in_ball(p) ? 1 : 0; }
    int chi_perp(const Vec3& p) const { return in_ball(p) ? 0 : 1; }

    // S(n) = { p : p_F - n r <= |p| <= p_F + n r }, closed on both sides.
    bool in_shell(const Vec3& p, int n) const;
    // The canonical Fermi surface S = S(3).
    bool on_surface(const Vec3& p) const { return in_shell(p, 3); }
};

LatticeContext make_context(int d, double p_F, int r);

// Exact |{p in Z^d : |p| <= p_F}| via row scans (O(p_F^{d-1}) disk counts).
std::int64_t fermi_count(int d, double p_F);

// |{(x,y) in Z^2 : x^2 + y^2 <= m}|; 0 for m < 0.
std::int64_t disk_count(std::int64_t m);

// Visits every lattice point of [lo,hi]^d in lexicographic order (trailing
// coordinates fixed at zero for d < 3).
void for_each_in_box(int d, int lo, int hi, const std::function<void(const Vec3&)>& fn);

// (Vhat * chi)(p) or (Vhat * chi_perp)(p): one measure factor, summed over
// supp Vhat only.
enum class ChiSide { inside, outside };
double convolve_with_chi(const LatticeContext& ctx, const Potential& pot, const Vec3& p,
                         ChiSide side, const Normalization& norm);

// Dispersion of particles and holes,
//   E_p = -chi(p) (p^2/2 + (lambda/2)(Vhat*chi_perp)(p))
//         + chi_perp(p) (p^2/2 - (lambda/2)(Vhat*chi)(p)),
// negative on the Fermi ball.
double dispersion_E(const LatticeContext& ctx, const Potential& pot, double lambda, const Vec3& p,
                    const Normalization& norm);

// Free dispersion e(p) = [chi_perp(p) - chi(p)] p^2 / 2. The doubled value
// 2 e(p) is an exact integer, which makes Kronecker energy-shell tests
// decidable in integer arithmetic.
std::int64_t free_energy_2e(const LatticeContext& ctx, const Vec3& p);
double free_energy_e(const LatticeContext& ctx, const Vec3& p);

}  // namespace fermibolt
