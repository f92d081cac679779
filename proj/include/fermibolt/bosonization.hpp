#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fermibolt/collision.hpp"
#include "fermibolt/distribution.hpp"
#include "fermibolt/lattice.hpp"

namespace fermibolt {

// Bosonized particle-hole interaction operator.
//
//   B_t = B_t^H + B_t^P,
//   B_t^H[f](h) = 2pi int dk |Vhat(k)|^2 ( alpha_H(h-k,k) f(h-k) (1-f(h))
//                                        - alpha_H(h,k)   f(h)   (1-f(h+k)) )
// and mirrored for particles. The coefficient
//   alpha_H(h,k) = chi(h)chi(h+k) int dr chi(r)chi_perp(r+k)
//                    delta_t[E_h - E_{h+k} - E_r - E_{r+k}]
// sums over the lune of transfer k: chi(r)chi_perp(r+k) = 1 forces
// p_F - |k| < |r| <= p_F, so only that shell is enumerated (O(p_F^{d-1}|k|)
// instead of O(p_F^d)). The sharp rule replaces delta_t by kappa at the exact
// resonance r.k = h.k (holes) or r.k = (p-k).k (particles), whose cardinality
// is the counting function below; the sharp coefficient is then
// kappa * measure * N(.,k), making B_t[f] -> t Bsharp[f] an exact limit.

enum class AlphaKind { hole, particle };

// Enumeration ranges for the r-sum; `shell` and `box` visit the same
// surviving lattice points in the same lexicographic order, so the optimized
// and brute-force evaluations agree bit-for-bit.
enum class LuneScan { shell, box };

double alpha(const LatticeContext& ctx, const Potential& pot, AlphaKind kind, const Vec3& q,
             const Vec3& k, const CollisionParams& params, LuneScan scan = LuneScan::shell);

// Independent derivation of 2pi t alpha through the boson propagator: expands
// G_k(tau) = int dr chi(r)chi_perp(r+k) e^{-i tau (E_r + E_{r+k})} and applies
// the closed-form double time integral per mode.
double alpha_propagator_oracle(const LatticeContext& ctx, const Potential& pot, AlphaKind kind,
                               const Vec3& q, const Vec3& k, double t, double lambda,
                               const Normalization& norm);

// Insert-once concurrent memo for alpha values at fixed (params); recomputing
// on a lost race is harmless because values are deterministic.
class AlphaCache {
public:
    double get(const LatticeContext& ctx, const Potential& pot, AlphaKind kind, const Vec3& q,
               const Vec3& k, const CollisionParams& params);

private:
    struct Key {
        AlphaKind kind;
        Vec3 q, k;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& key) const {
            Vec3Hash h;
            return h(key.q) * 1000003u ^ h(key.k) ^ static_cast<std::size_t>(key.kind);
        }
    };
    std::unordered_map<Key, double, KeyHash> map_;
    std::shared_mutex mutex_;
};

// Single-point B[f](x) (both sectors; the chi prefactors select the right
// one). cache may be null.
double b_value(const LatticeContext& ctx, const Potential& pot, const Distribution& f,
               const CollisionParams& params, const Vec3& x, AlphaCache* cache = nullptr);

// B[f] over the reachable set (supp f plus one kernel transfer).
std::map<Vec3, double> b_apply(const LatticeContext& ctx, const Potential& pot,
                               const Distribution& f, const CollisionParams& params, int jobs = 1);

// Literal oracle: k runs over the full [-r,r]^d box and every alpha is a
// full-box lattice sum.
double b_brute(const LatticeContext& ctx, const Potential& pot, const Distribution& f,
               const CollisionParams& params, const Vec3& x);

// ||B_t[f] - t Bsharp[f]||_inf against t (1/t^2 + (lambda t)^2) N^{(d-1)/d}
// ||1-f||_inf ||f||_inf.
LimitCheck b_limit_check(const LatticeContext& ctx, const Potential& pot, const Distribution& f,
                         double lambda, double t, const Normalization& norm, int jobs = 1);

// ----- lattice counting (d = 3) -----

// N(q,k) = |{ r in Z^3 : |r| <= p_F, |r+k| > p_F, r.k = q.k }|. Exact; an
// axis-aligned k reduces to a 2D annulus count, everything else scans the
// plane slice. Zero unless -k^2/2 < q.k <= p_F |k|.
std::int64_t counting_N(const LatticeContext& ctx, const Vec3& q, const Vec3& k);
std::int64_t counting_N_plane(const LatticeContext& ctx, const Vec3& q, const Vec3& k);
std::int64_t counting_N_brute(const LatticeContext& ctx, const Vec3& q, const Vec3& k);

// Gauss circle: n(r) = |{x in Z^2 : |x|^2 <= r2}| and remainder n - pi r2.
struct GaussCircle {
    std::int64_t count = 0;
    double remainder = 0.0;
};
GaussCircle gauss_circle(std::int64_t r2);

// |L(k)| = |{ q : |q| <= p_F, |q+k| > p_F }| (d = 3).
std::int64_t lune_cardinality(const LatticeContext& ctx, const Vec3& k);
std::int64_t lune_cardinality_brute(const LatticeContext& ctx, const Vec3& k);

}  // namespace fermibolt
