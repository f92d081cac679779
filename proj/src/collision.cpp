#include "fermibolt/collision.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace fermibolt {

namespace detail {

Vec3 resolve_slot(int group, int rs, const Vec3 q[4]) {
    Vec3 acc{0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        if (i == rs) continue;
        if (kSig[group][i] > 0)
            acc = acc + q[i];
        else
            acc = acc - q[i];
    }
    return kSig[group][rs] > 0 ? -acc : acc;
}

class DispersionMemo {
public:
    DispersionMemo(const LatticeContext& ctx, const Potential& pot, const CollisionParams& params)
        : ctx_(ctx), pot_(pot), params_(params) {}

    double energy(const Vec3& p) {
        auto it = cache_.find(p);
        if (it != cache_.end()) return it->second;
        double e = dispersion_E(ctx_, pot_, params_.lambda, p, params_.norm);
        cache_.emplace(p, e);
        return e;
    }

private:
    const LatticeContext& ctx_;
    const Potential& pot_;
    const CollisionParams& params_;
    std::unordered_map<Vec3, double, Vec3Hash> cache_;
};

double quad_term(const LatticeContext& ctx, const Potential& pot,
                 const std::function<double(const Vec3&)>& f, const CollisionParams& params,
                 int group, const Vec3 q[4], DispersionMemo& memo, QStats* stats) {
    double sigma;
    if (group == 0) {
        int all_in = ctx.chi(q[0]) * ctx.chi(q[1]) * ctx.chi(q[2]) * ctx.chi(q[3]);
        int all_out =
            ctx.chi_perp(q[0]) * ctx.chi_perp(q[1]) * ctx.chi_perp(q[2]) * ctx.chi_perp(q[3]);
        if (all_in + all_out == 0) return 0.0;
        double kd = pot.value(q[0] - q[3]) - pot.value(q[0] - q[2]);
        sigma = static_cast<double>(all_in + all_out) * kd * kd;
    } else {
        int hp = ctx.chi(q[0]) * ctx.chi(q[2]) * ctx.chi_perp(q[1]) * ctx.chi_perp(q[3]);
        int ph = ctx.chi_perp(q[0]) * ctx.chi_perp(q[2]) * ctx.chi(q[1]) * ctx.chi(q[3]);
        if (hp + ph == 0) return 0.0;
        double kv = pot.value(q[0] - q[2]);
        sigma = 2.0 * static_cast<double>(hp + ph) * kv * kv;
    }
    if (sigma == 0.0) return 0.0;

    double gain = f(q[2]) * f(q[3]) * (1.0 - f(q[0])) * (1.0 - f(q[1]));
    double loss = f(q[0]) * f(q[1]) * (1.0 - f(q[2])) * (1.0 - f(q[3]));
    double bracket = gain - loss;
    if (bracket == 0.0) return 0.0;

    bool resonant = free_energy_2e(ctx, q[0]) + free_energy_2e(ctx, q[1]) -
                        free_energy_2e(ctx, q[2]) - free_energy_2e(ctx, q[3]) ==
                    0;
    if (stats) {
        ++stats->configs;
        if (resonant) ++stats->resonant;
    }
    double energy;
    if (params.rule == EnergyRule::sharp) {
        if (!resonant) return 0.0;
        energy = params.norm.kappa();
    } else {
        double dE = memo.energy(q[0]) + memo.energy(q[1]) - memo.energy(q[2]) - memo.energy(q[3]);
        energy = delta_t(params.t, dE);
    }
    return sigma * energy * bracket;
}

// Slot layout for a (signature, pinned-slot) block: the two lowest free
// indices are enumerated, the highest is resolved from the signature.
struct SlotLayout {
    int free1, free2, resolved;
};
inline SlotLayout layout_for(int s) {
    SlotLayout l{};
    int idx[3], n = 0;
    for (int i = 0; i < 4; ++i)
        if (i != s) idx[n++] = i;
    l.free1 = idx[0];
    l.free2 = idx[1];
    l.resolved = idx[2];
    return l;
}

}  // namespace detail

std::vector<Vec3> reachable_set(const Distribution& f, const Potential& pot) {
    std::vector<Vec3> out = f.support();
    for (const Vec3& p : f.support()) {
        for (const auto& [k, v] : pot.support()) {
            (void)v;
            out.push_back(p + k);
            out.push_back(p - k);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double q_value(const LatticeContext& ctx, const Potential& pot, const Distribution& f,
               const CollisionParams& params, const Vec3& p, QStats* stats) {
    using namespace detail;
    if (params.rule == EnergyRule::mollified && !(params.t > 0.0))
        throw std::invalid_argument("q_value: mollified rule requires t > 0");
    const std::vector<Vec3> supp = f.support();
    auto fv = [&f](const Vec3& q) { return f.at(q); };
    DispersionMemo memo(ctx, pot, params);

    double u = params.norm.measure(ctx.d);
    double pref = kPi * u * u;
    double grand = 0.0;

    std::vector<std::pair<Vec3, Vec3>> cands;
    std::vector<Vec3> kernel_cands;
    for (int g = 0; g < 2; ++g) {
        for (int s = 0; s < 4; ++s) {
            SlotLayout lay = layout_for(s);
            cands.clear();
            Vec3 q[4];
            auto push_quad = [&]() { cands.emplace_back(q[lay.free1], q[lay.free2]); };

            // Two occupation patterns force two slots into supp f:
            // gain needs (q2,q3), loss needs (q0,q1).
            for (int pat = 0; pat < 2; ++pat) {
                const int fa = pat == 0 ? 2 : 0;
                const int fb = pat == 0 ? 3 : 1;
                if (s == fa || s == fb) {
                    // The pinned slot is itself a supp-f slot; the
                    // complementary pair is unknown, tied by the signature,
                    // and the kernel restricts the enumerated member.
                    if (f.at(p) == 0.0) continue;
                    const int other = s == fa ? fb : fa;
                    const int ua = pat == 0 ? 0 : 2;  // enumerated unknown
                    const int ub = pat == 0 ? 1 : 3;  // resolved unknown
                    for (const Vec3& w : supp) {
                        q[s] = p;
                        q[other] = w;
                        kernel_cands.clear();
                        if (pat == 0) {
                            // unknown (q0,q1): kernel forces q0 near q2 or,
                            // in group A, near q3.
                            for (const auto& [k, v] : pot.support()) {
                                (void)v;
                                kernel_cands.push_back(q[2] + k);
                                if (g == 0) kernel_cands.push_back(q[3] + k);
                            }
                        } else {
                            // unknown (q2,q3): kernel forces q2 near q0 or,
                            // in group A (where q0-q3 = q2-q1), near q1.
                            for (const auto& [k, v] : pot.support()) {
                                (void)v;
                                kernel_cands.push_back(q[0] - k);
                                if (g == 0) kernel_cands.push_back(q[1] + k);
                            }
                        }
                        for (const Vec3& cand : kernel_cands) {
                            q[ua] = cand;
                            q[ub] = resolve_slot(g, ub, q);
                            push_quad();
                        }
                    }
                } else {
                    // Both supp-f slots are free of the pin: enumerate them,
                    // resolve the single remaining slot from the signature.
                    const int rest = 6 - s - fa - fb;  // slot indices sum to 6
                    for (const Vec3& w1 : supp) {
                        for (const Vec3& w2 : supp) {
                            q[s] = p;
                            q[fa] = w1;
                            q[fb] = w2;
                            q[rest] = resolve_slot(g, rest, q);
                            push_quad();
                        }
                    }
                }
            }

            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

            double acc = 0.0;
            for (const auto& [a, b] : cands) {
                q[s] = p;
                q[lay.free1] = a;
                q[lay.free2] = b;
                q[lay.resolved] = resolve_slot(g, lay.resolved, q);
                acc += quad_term(ctx, pot, fv, params, g, q, memo, stats);
            }
            grand += kSig[0][s] > 0 ? acc : -acc;  // bracket signs: +,+,-,-
        }
    }
    return pref * grand;
}

std::map<Vec3, double> q_apply(const LatticeContext& ctx, const Potential& pot,
                               const Distribution& f, const CollisionParams& params, int jobs) {
    std::vector<Vec3> points = reachable_set(f, pot);
    std::vector<double> vals(points.size(), 0.0);
    parallel_for(points.size(), jobs,
                 [&](std::size_t i) { vals[i] = q_value(ctx, pot, f, params, points[i]); });
    std::map<Vec3, double> out;
    for (std::size_t i = 0; i < points.size(); ++i) out.emplace(points[i], vals[i]);
    return out;
}

double q_brute(const LatticeContext& ctx, const Potential& pot,
               const std::function<double(const Vec3&)>& f, const CollisionParams& params,
               const Vec3& p, int box_radius) {
    using namespace detail;
    if (ctx.p_F > 8.0) throw std::invalid_argument("q_brute: refuses p_F > 8 (cost guard)");
    if (params.rule == EnergyRule::mollified && !(params.t > 0.0))
        throw std::invalid_argument("q_brute: mollified rule requires t > 0");
    const int M = box_radius < 0 ? static_cast<int>(std::ceil(ctx.p_F)) + 2 * ctx.r : box_radius;
    DispersionMemo memo(ctx, pot, params);

    double u = params.norm.measure(ctx.d);
    double pref = kPi * u * u;
    double grand = 0.0;
    for (int g = 0; g < 2; ++g) {
        for (int s = 0; s < 4; ++s) {
            SlotLayout lay = layout_for(s);
            double acc = 0.0;
            for_each_in_box(ctx.d, -M, M, [&](const Vec3& a) {
                for_each_in_box(ctx.d, -M, M, [&](const Vec3& b) {
                    Vec3 q[4];
                    q[s] = p;
                    q[lay.free1] = a;
                    q[lay.free2] = b;
                    q[lay.resolved] = resolve_slot(g, lay.resolved, q);
                    acc += quad_term(ctx, pot, f, params, g, q, memo, nullptr);
                });
            });
            grand += kSig[0][s] > 0 ? acc : -acc;
        }
    }
    return pref * grand;
}

LimitCheck q_limit_check(const LatticeContext& ctx, const Potential& pot, const Distribution& f,
                         double lambda, double t, const Normalization& norm, int jobs) {
    double v_l1 = norm.measure(ctx.d) * pot.l1_raw();
    if (lambda * v_l1 > 0.5)
        throw std::invalid_argument("q_limit_check: requires lambda*||Vhat||_1 <= 1/2");
    if (!(t > 0.0)) throw std::invalid_argument("q_limit_check: t must be > 0");

    CollisionParams moll{lambda, t, EnergyRule::mollified, norm};
    CollisionParams sharp{lambda, t, EnergyRule::sharp, norm};
    auto qm = q_apply(ctx, pot, f, moll, jobs);
    auto qs = q_apply(ctx, pot, f, sharp, jobs);

    LimitCheck out;
    for (const auto& [p, vm] : qm)
        out.deviation = std::max(out.deviation, std::abs(vm - t * qs.at(p)));

    double f_inf = 0.0, f_l1 = 0.0;
    for (const auto& [p, v] : f.entries()) {
        (void)p;
        f_inf = std::max(f_inf, std::abs(v));
        f_l1 += std::abs(v);
    }
    f_l1 *= norm.measure(ctx.d);
    double ft_inf = 1.0;  // 1 - f attains 1 off the (finite) support
    out.structural =
        t * (1.0 / (t * t) + (lambda * t) * (lambda * t)) * ft_inf * ft_inf * f_l1 * f_inf;
    out.ratio = out.structural > 0.0 ? out.deviation / out.structural : 0.0;
    return out;
}

double ConservationReport::max_residual() const {
    if (abs_sum <= 0.0) return 0.0;
    double m = std::abs(number);
    m = std::max(m, std::abs(ball));
    m = std::max(m, std::abs(complement));
    for (double c : momentum) m = std::max(m, std::abs(c));
    return m / abs_sum;
}

ConservationReport conservation_report(const LatticeContext& ctx,
                                       const std::map<Vec3, double>& values) {
    ConservationReport rep;
    for (const auto& [p, v] : values) {
        rep.abs_sum += std::abs(v);
        rep.number += v;
        if (ctx.in_ball(p))
            rep.ball += v;
        else
            rep.complement += v;
        int sign = ctx.chi_perp(p) - ctx.chi(p);
        for (int i = 0; i < 3; ++i) rep.momentum[i] += static_cast<double>(sign * p[i]) * v;
        rep.energy += free_energy_e(ctx, p) * v;
    }
    return rep;
}

}  // namespace fermibolt
