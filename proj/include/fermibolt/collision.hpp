#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "fermibolt/distribution.hpp"
#include "fermibolt/lattice.hpp"
#include "fermibolt/mollifier.hpp"

namespace fermibolt {

// Quantum Boltzmann collision operator on the lattice.
//
// Q_t[f](p) sums over quadruples (p1,p2,p3,p4) carrying
//   * a channel kernel sigma = sigma_HH + sigma_PP + sigma_HP + sigma_PH,
//   * the slot bracket delta(p-p1)+delta(p-p2)-delta(p-p3)-delta(p-p4),
//   * the energy factor delta_t[E1+E2-E3-E4],
//   * the gain-loss factor f3 f4 (1-f1)(1-f2) - f1 f2 (1-f3)(1-f4).
// The sharp operator replaces the energy factor by kappa * [Delta e == 0],
// decided exactly on doubled integer free energies.
//
// Channels group into two momentum signatures:
//   group A (HH, PP):  p1 + p2 - p3 - p4 = 0, kernel |V(p1-p4)-V(p1-p3)|^2
//   group B (HP, PH):  p1 - p2 - p3 + p4 = 0, kernel 2|V(p1-p3)|^2
//
// Evaluation strategy: the bracket pins one slot to the output momentum, the
// momentum signature resolves one more, and the remaining two are enumerated
// sparsely: the gain/loss factor forces two slots into supp f and the kernel
// forces the leftover free slot within supp Vhat of a known slot. That turns
// the literal O(box^{2d}) sum per output point into
// O(|supp f|^2 + |supp f| |supp Vhat|) configurations per (signature, slot).
//
// The optimized evaluator and the brute-force oracle share one per-
// configuration expression and one lexicographic configuration order, so in
// serial mode they agree bit-for-bit: the optimized path only skips
// configurations whose contribution is exactly zero.

enum class EnergyRule { mollified, sharp };

struct CollisionParams {
    double lambda = 0.0;
    double t = 1.0;  // used by the mollified rule only
    EnergyRule rule = EnergyRule::mollified;
    Normalization norm{};
};

// Per-call instrumentation (serial use only).
struct QStats {
    std::int64_t configs = 0;    // configurations with nonzero kernel and occupation
    std::int64_t resonant = 0;   // of those, on the exact Kronecker shell
};

// Output momenta that can carry a nonzero value of Q[f] or B[f]:
// supp f together with one kernel transfer in either direction.
std::vector<Vec3> reachable_set(const Distribution& f, const Potential& pot);

// Optimized single-point evaluation.
double q_value(const LatticeContext& ctx, const Potential& pot, const Distribution& f,
               const CollisionParams& params, const Vec3& p, QStats* stats = nullptr);

// Q[f] on the whole reachable set (parallel over output momenta; per-point
// sums are serial, so the result does not depend on jobs).
std::map<Vec3, double> q_apply(const LatticeContext& ctx, const Potential& pot,
                               const Distribution& f, const CollisionParams& params, int jobs = 1);

// Literal quadruple sum with every delta evaluated numerically, free slots
// running over the full box. f is an arbitrary callable (constant functions
// included). Refuses p_F > 8. box_radius < 0 selects ceil(p_F) + 2r, one
// kernel transfer beyond any support this oracle is used with.
double q_brute(const LatticeContext& ctx, const Potential& pot,
               const std::function<double(const Vec3&)>& f, const CollisionParams& params,
               const Vec3& p, int box_radius = -1);

// ||Q_t[f] - t Qsharp[f]||_inf against the structural bound
// t (1/t^2 + (lambda t)^2) ||1-f||_inf^2 ||f||_1 ||f||_inf.
// Requires lambda ||Vhat||_l1 <= 1/2.
struct LimitCheck {
    double deviation = 0.0;
    double structural = 0.0;
    double ratio = 0.0;
};
LimitCheck q_limit_check(const LatticeContext& ctx, const Potential& pot, const Distribution& f,
                         double lambda, double t, const Normalization& norm, int jobs = 1);

// Conservation residuals of an operator output, all relative to sum |values|:
// total number, per-sector (ball / complement) number, signed momentum
// m(p) = (chi_perp - chi) p componentwise, and signed free energy (exact for
// the sharp rule, t-dependent for the mollified one).
struct ConservationReport {
    double abs_sum = 0.0;  // sum |values|
    double number = 0.0;
    double ball = 0.0;
    double complement = 0.0;
    double momentum[3] = {0.0, 0.0, 0.0};
    double energy = 0.0;
    double max_residual() const;
};
ConservationReport conservation_report(const LatticeContext& ctx,
                                       const std::map<Vec3, double>& values);

namespace detail {

// Signature sign vectors over slots (0-indexed): group 0 is A, group 1 is B.
inline constexpr int kSig[2][4] = {{1, 1, -1, -1}, {1, -1, -1, 1}};

// Value of slot `rs` implied by the signature and the other three slots.
Vec3 resolve_slot(int group, int rs, const Vec3 q[4]);

// The shared literal per-configuration expression (kernel x energy x
// gain-loss), without the slot sign and without the outer prefactor.
class DispersionMemo;
double quad_term(const LatticeContext& ctx, const Potential& pot,
                 const std::function<double(const Vec3&)>& f, const CollisionParams& params,
                 int group, const Vec3 q[4], DispersionMemo& memo, QStats* stats);

}  // namespace detail

}  // namespace fermibolt
