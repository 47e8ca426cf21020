#include "pgic/subdiff.hpp"

#include <algorithm>
#include <cmath>

#include "pgic/error.hpp"

namespace pgic {

std::string_view to_string(RegionLabel label) {
    switch (label) {
        case RegionLabel::A1: return "A1";
        case RegionLabel::A2: return "A2";
        case RegionLabel::A3: return "A3";
        case RegionLabel::A4: return "A4";
    }
    return "?";
}

int region_index(RegionLabel label) noexcept { return static_cast<int>(label) + 1; }

RegionLabel region_label(const PowerPair& pp) noexcept {
    if (pp.p > 0.0 && pp.q > 0.0) return RegionLabel::A1;
    if (pp.p > 0.0) return RegionLabel::A2;
    if (pp.q > 0.0) return RegionLabel::A3;
    return RegionLabel::A4;
}

Subgradient base_point(const SubdiffSet& set) noexcept {
    struct Visitor {
        Subgradient operator()(const SubdiffPoint& s) const { return s.k; }
        Subgradient operator()(const RayFixedKp& s) const { return {s.kp, s.kq_min}; }
        Subgradient operator()(const RayFixedKq& s) const { return {s.kp_min, s.kq}; }
        Subgradient operator()(const Quadrant& s) const { return {s.kp_min, s.kq_min}; }
    };
    return std::visit(Visitor{}, set);
}

bool contains(const SubdiffSet& set, const Subgradient& k, double tol) noexcept {
    auto equal = [tol](double x, double y) { return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)}); };
    auto at_least = [tol](double x, double lo) { return x >= lo - tol * std::max(1.0, std::abs(lo)); };
    struct Visitor {
        const Subgradient& k;
        decltype(equal)& eq;
        decltype(at_least)& ge;
        bool operator()(const SubdiffPoint& s) const { return eq(k.kp, s.k.kp) && eq(k.kq, s.k.kq); }
        bool operator()(const RayFixedKp& s) const { return eq(k.kp, s.kp) && ge(k.kq, s.kq_min); }
        bool operator()(const RayFixedKq& s) const { return ge(k.kp, s.kp_min) && eq(k.kq, s.kq); }
        bool operator()(const Quadrant& s) const { return ge(k.kp, s.kp_min) && ge(k.kq, s.kq_min); }
    };
    return std::visit(Visitor{k, equal, at_least}, set);
}

SubdiffSet subdifferential(const SubChannel& ch, const PowerPair& pp) {
    if (!in_noisy_region(ch, pp)) {
        throw Error(Errc::OutsideRegion, "power pair lies outside the noisy-interference region");
    }
    // On the axes the gradient formula evaluates to the one-sided derivative
    // of the free coordinate, which is the lower end of the ray.
    const RateGradient g = tin_gradient(ch, pp);
    switch (region_label(pp)) {
        case RegionLabel::A1: return SubdiffPoint{{g.dp, g.dq}};
        case RegionLabel::A2: return RayFixedKp{g.dp, g.dq};
        case RegionLabel::A3: return RayFixedKq{g.dp, g.dq};
        case RegionLabel::A4: break;
    }
    return Quadrant{ch.c() / 2.0, ch.d() / 2.0};
}

CornerImages corner_images(const SubChannel& ch) {
    const Corners corners = corner_points(ch);
    const double a = ch.a(), b = ch.b(), c = ch.c(), d = ch.d();
    const double qs = corners.s.q;
    const double pt = corners.t.p;
    return CornerImages{
        Subgradient{c / 2.0, d / 2.0},
        Subgradient{c / (2.0 * (1.0 + a * qs)) - b * d * qs / (2.0 * (1.0 + d * qs)), d / (2.0 * (1.0 + d * qs))},
        Subgradient{c / (2.0 * (1.0 + c * pt)), d / (2.0 * (1.0 + b * pt)) - a * c * pt / (2.0 * (1.0 + c * pt))},
    };
}

namespace {

constexpr int kMaxNewtonIterations = 100;
constexpr int kBisectionIterations = 200;

Demand swap_users(const Demand& m) {
    Demand out{PowerPair{m.pp.q, m.pp.p}, m.label};
    if (m.label == RegionLabel::A2) out.label = RegionLabel::A3;
    else if (m.label == RegionLabel::A3) out.label = RegionLabel::A2;
    return out;
}

// Channels with b = 0 (interference only into receiver 1, possibly a = 0 as
// well). The region is the whole quadrant and every case has a closed form.
Demand demand_one_sided(const SubChannel& ch, const Subgradient& k) {
    const double a = ch.a(), c = ch.c(), d = ch.d();
    const bool p_idle = k.kp >= c / 2.0;
    const bool q_idle = k.kq >= d / 2.0;
    if (p_idle && q_idle) return Demand{{0.0, 0.0}, RegionLabel::A4};

    if (!p_idle) {
        const double p = 1.0 / (2.0 * k.kp) - 1.0 / c;
        const double kq_min = d / 2.0 - a * c * p / (2.0 * (1.0 + c * p));
        if (p > 0.0 && k.kq >= kq_min) return Demand{{p, 0.0}, RegionLabel::A2};
    }
    if (!q_idle) {
        const double q = 1.0 / (2.0 * k.kq) - 1.0 / d;
        const double kp_min = c / (2.0 * (1.0 + a * q));
        if (q > 0.0 && k.kp >= kp_min) return Demand{{0.0, q}, RegionLabel::A3};
    }

    // Interior: 1 + cp + aq = c / (2 kp), then d/(1+dq) - a/(1+aq) = rhs.
    const double u = c / (2.0 * k.kp);
    const double rhs = 2.0 * k.kq - 2.0 * a * k.kp / c;
    double q = 0.0;
    if (rhs > 0.0) {
        if (a == 0.0) {
            q = 1.0 / rhs - 1.0 / d;
        } else {
            // rhs*a*d q^2 + rhs*(a+d) q + rhs - (d-a) = 0, positive root in stable form.
            const double qa = a * d;
            const double qb = a + d;
            const double qc = 1.0 - (d - a) / rhs;
            const double disc = std::max(0.0, qb * qb - 4.0 * qa * qc);
            q = -2.0 * qc / (qb + std::sqrt(disc));
        }
    }
    const double p = (u - 1.0 - a * q) / c;
    if (p > 0.0 && q > 0.0) return Demand{{p, q}, RegionLabel::A1};

    // Only reachable through rounding right at a region boundary.
    if (p > 0.0) return Demand{{std::max(0.0, 1.0 / (2.0 * k.kp) - 1.0 / c), 0.0}, RegionLabel::A2};
    if (q > 0.0) return Demand{{0.0, std::max(0.0, 1.0 / (2.0 * k.kq) - 1.0 / d)}, RegionLabel::A3};
    return Demand{{0.0, 0.0}, RegionLabel::A4};
}

double objective(const SubChannel& ch, const Subgradient& k, const PowerPair& x) {
    return tin_rate(ch, x).nats - k.kp * x.p - k.kq * x.q;
}

// Damped Newton ascent on C(x) - k.x over the open triangle. Iterates keep a
// fraction of their distance to every edge so they never leave the region.
std::optional<PowerPair> interior_newton(const SubChannel& ch, const Subgradient& k, const Corners& corners) {
    const double nx = ch.b() * std::sqrt(ch.a() * ch.c());  // outward normal of the S-T edge
    const double ny = ch.a() * std::sqrt(ch.b() * ch.d());
    const double scale = std::max({1.0, k.kp, k.kq});

    PowerPair x{corners.t.p / 3.0, corners.s.q / 3.0};
    for (int it = 0; it < kMaxNewtonIterations; ++it) {
        const RateGradient g = tin_gradient(ch, x);
        const double rp = g.dp - k.kp;
        const double rq = g.dq - k.kq;
        const double res = std::max(std::abs(rp), std::abs(rq));
        if (res <= 1e-15 * scale) return x;

        const RateHessian h = tin_hessian(ch, x);
        const double det = h.pp * h.qq - h.pq * h.pq;
        double dp, dq;
        if (h.pp < 0.0 && det > 0.0) {
            dp = -(h.qq * rp - h.pq * rq) / det;
            dq = -(-h.pq * rp + h.pp * rq) / det;
        } else {
            dp = rp;
            dq = rq;
        }

        double alpha_max = 1.0;
        if (dp < 0.0) alpha_max = std::min(alpha_max, 0.99 * (-x.p / dp));
        if (dq < 0.0) alpha_max = std::min(alpha_max, 0.99 * (-x.q / dq));
        const double outward = nx * dp + ny * dq;
        if (outward > 0.0) alpha_max = std::min(alpha_max, 0.99 * noisy_region_margin(ch, x) / outward);

        const double f0 = objective(ch, k, x);
        const double slope = rp * dp + rq * dq;
        auto residual_at = [&](const PowerPair& y) {
            const RateGradient gy = tin_gradient(ch, y);
            return std::max(std::abs(gy.dp - k.kp), std::abs(gy.dq - k.kq));
        };
        // Far from the solution the objective drives the search; close to it
        // objective changes fall below rounding and the residual takes over.
        double alpha = alpha_max;
        PowerPair trial{};
        bool accepted = false;
        for (int ls = 0; ls < 60; ++ls) {
            trial = PowerPair{x.p + alpha * dp, x.q + alpha * dq};
            if (trial.p > 0.0 && trial.q > 0.0) {
                const double f1 = objective(ch, k, trial);
                if ((f1 > f0 && f1 >= f0 + 1e-4 * alpha * slope) || residual_at(trial) <= (1.0 - 0.5 * alpha) * res) {
                    accepted = true;
                    break;
                }
            }
            alpha *= 0.5;
        }
        if (!accepted) return res <= 1e-12 * scale ? std::optional<PowerPair>(x) : std::nullopt;
        x = trial;
    }
    const RateGradient g = tin_gradient(ch, x);
    const double res = std::max(std::abs(g.dp - k.kp), std::abs(g.dq - k.kq));
    return res <= 1e-12 * scale ? std::optional<PowerPair>(x) : std::nullopt;
}

Demand demand_two_sided(const SubChannel& ch, const Subgradient& k) {
    const Corners corners = corner_points(ch);
    const double a = ch.a(), b = ch.b(), c = ch.c(), d = ch.d();
    const double pt = corners.t.p;
    const double qs = corners.s.q;

    const bool p_idle = k.kp >= c / 2.0;
    const bool q_idle = k.kq >= d / 2.0;
    if (p_idle && q_idle) return Demand{{0.0, 0.0}, RegionLabel::A4};

    if (!p_idle) {
        const double p = 1.0 / (2.0 * k.kp) - 1.0 / c;
        if (p > 0.0 && p <= pt) {
            const double kq_min = d / (2.0 * (1.0 + b * p)) - a * c * p / (2.0 * (1.0 + c * p));
            if (k.kq >= kq_min) return Demand{{p, 0.0}, RegionLabel::A2};
        }
    }
    if (!q_idle) {
        const double q = 1.0 / (2.0 * k.kq) - 1.0 / d;
        if (q > 0.0 && q <= qs) {
            const double kp_min = c / (2.0 * (1.0 + a * q)) - b * d * q / (2.0 * (1.0 + d * q));
            if (k.kp >= kp_min) return Demand{{0.0, q}, RegionLabel::A3};
        }
    }

    // Best point on the S-T edge x(t) = (t pt, (1-t) qs). The objective is
    // concave along the edge, so bisect on its derivative.
    auto edge_point = [&](double t) { return PowerPair{t * pt, (1.0 - t) * qs}; };
    auto edge_slope = [&](double t) {
        const RateGradient g = tin_gradient(ch, edge_point(t));
        return (g.dp - k.kp) * pt - (g.dq - k.kq) * qs;
    };
    double t_best;
    if (edge_slope(0.0) <= 0.0) {
        t_best = 0.0;
    } else if (edge_slope(1.0) >= 0.0) {
        t_best = 1.0;
    } else {
        double lo = 0.0, hi = 1.0;
        for (int i = 0; i < kBisectionIterations && hi - lo > 1e-17; ++i) {
            const double mid = 0.5 * (lo + hi);
            (edge_slope(mid) > 0.0 ? lo : hi) = mid;
        }
        t_best = 0.5 * (lo + hi);
    }
    const PowerPair edge = edge_point(t_best);
    const RateGradient ge = tin_gradient(ch, edge);
    const double rp = ge.dp - k.kp;
    const double rq = ge.dq - k.kq;
    const double nx = b * std::sqrt(a * c);
    const double ny = a * std::sqrt(b * d);
    double mu;
    if (t_best == 1.0) mu = rp / nx;
    else if (t_best == 0.0) mu = rq / ny;
    else mu = (rp * nx + rq * ny) / (nx * nx + ny * ny);
    const double normal_residual = mu * std::hypot(nx, ny);
    const double scale = std::max({k.kp, k.kq, std::abs(ge.dp), std::abs(ge.dq)});

    if (normal_residual > 1e-11 * scale) return Demand{edge, std::nullopt};

    if (auto x = interior_newton(ch, k, corners)) return Demand{*x, RegionLabel::A1};

    // The maximizer sits on the edge with a vanishing multiplier.
    if (normal_residual > -1e-9 * scale) {
        // Corner T or S reached from its ray, or an edge point with a vanishing multiplier.
        if (t_best == 1.0 && std::abs(rp) <= 1e-9 * scale && rq <= 1e-9 * scale) return Demand{edge, RegionLabel::A2};
        if (t_best == 0.0 && std::abs(rq) <= 1e-9 * scale && rp <= 1e-9 * scale) return Demand{edge, RegionLabel::A3};
        if (std::abs(rp) <= 1e-9 * scale && std::abs(rq) <= 1e-9 * scale && edge.p > 0.0 && edge.q > 0.0) {
            return Demand{edge, RegionLabel::A1};
        }
    }
    throw Error(Errc::NumericalFailure, "interior inversion did not converge");
}

}  // namespace

Demand demand(const SubChannel& ch, const Subgradient& k) {
    if (!(k.kp > 0.0) || !(k.kq > 0.0) || !std::isfinite(k.kp) || !std::isfinite(k.kq)) {
        throw Error(Errc::InvalidArgument, "subgradient components must be positive and finite");
    }
    switch (classify(ch)) {
        case ChannelClass::TwoSided: return demand_two_sided(ch, k);
        case ChannelClass::OneSidedIntoRx1:
        case ChannelClass::InterferenceFree: return demand_one_sided(ch, k);
        case ChannelClass::OneSidedIntoRx2: break;
    }
    return swap_users(demand_one_sided(ch.mirrored(), Subgradient{k.kq, k.kp}));
}

std::optional<Preimage> invert(const SubChannel& ch, const Subgradient& k) {
    const Demand m = demand(ch, k);
    if (!m.label) return std::nullopt;
    return Preimage{m.pp, *m.label};
}

bool in_B(const SubChannel& ch, const Subgradient& k) { return invert(ch, k).has_value(); }

}  // namespace pgic
