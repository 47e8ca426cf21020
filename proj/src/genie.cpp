#include "pgic/genie.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "pgic/error.hpp"

namespace pgic {

namespace {

constexpr double kDiscriminantFloor = -1e-10;
constexpr double kIdentityFilter = 1e-7;

bool close_rel(double x, double y, double tol) { return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)}); }

// (1+aq) p / (1+aq-rho^2) * (1/sigma - sqrt(c) rho / (1+aq))^2 + 1 + cp / (1+aq)
double genie_term(double p, double q, double a, double c, double sigma_sq, double rho) {
    const double s = 1.0 + a * q;
    const double denom = s - rho * rho;
    if (!(denom > 0.0)) throw Error(Errc::DomainError, "genie denominator 1 + aq - rho^2 is not positive");
    const double gap = 1.0 / std::sqrt(sigma_sq) - std::sqrt(c) * rho / s;
    return 0.5 * std::log(s * p / denom * gap * gap + 1.0 + c * p / s);
}

}  // namespace

OneSidedGenie one_sided_genie(double cross, double direct, double interferer_direct, double interferer_power) {
    if (!(cross >= 0.0) || !(direct > 0.0) || !(interferer_direct > cross) || !(interferer_power >= 0.0)) {
        throw Error(Errc::Infeasible, "one-sided genie needs 0 <= cross < interferer direct gain");
    }
    const double rho = std::sqrt(1.0 - cross / interferer_direct);
    const double lift = 1.0 + cross * interferer_power;
    return OneSidedGenie{lift * lift / (direct * rho * rho), rho};
}

std::vector<GenieParams> genie_branches(const SubChannel& ch, const PowerPair& opt) {
    std::vector<GenieParams> out;
    if (classify(ch) != ChannelClass::TwoSided) return out;
    const double a = ch.a(), b = ch.b(), c = ch.c(), d = ch.d();
    const double lift1 = 1.0 + a * opt.q;  // 1 + aQ*
    const double lift2 = 1.0 + b * opt.p;  // 1 + bP*
    const double beta = b / c * lift1 * lift1;
    const double alpha = a / d * lift2 * lift2;
    const double x = beta - alpha + 1.0;
    const double y = alpha - beta + 1.0;
    double disc = x * x - 4.0 * beta;
    if (disc < kDiscriminantFloor) return out;
    disc = std::max(disc, 0.0);
    const double root = std::sqrt(disc);

    for (int s1 : {+1, -1}) {
        for (int s2 : {+1, -1}) {
            const double sigma1_sq = (x + s1 * root) / (2.0 * b);
            const double sigma2_sq = (y + s2 * root) / (2.0 * a);
            if (!(sigma1_sq > 0.0) || !(sigma2_sq > 0.0)) continue;
            const double rho1_sq = 1.0 - a * sigma2_sq;
            const double rho2_sq = 1.0 - b * sigma1_sq;
            if (rho1_sq < -1e-12 || rho2_sq < -1e-12) continue;
            const double rho1 = std::sqrt(std::max(rho1_sq, 0.0));
            const double rho2 = std::sqrt(std::max(rho2_sq, 0.0));
            if (!close_rel(std::sqrt(c) * rho1 * std::sqrt(sigma1_sq), lift1, kIdentityFilter) ||
                !close_rel(std::sqrt(d) * rho2 * std::sqrt(sigma2_sq), lift2, kIdentityFilter)) {
                continue;
            }
            GenieParams gp;
            gp.cls = ChannelClass::TwoSided;
            gp.sigma1_sq = sigma1_sq;
            gp.sigma2_sq = sigma2_sq;
            gp.rho1 = rho1;
            gp.rho2 = rho2;
            gp.root_choice = RootChoice{s1, s2};
            out.push_back(gp);
        }
    }
    return out;
}

GenieParams genie_params(const SubChannel& ch, const PowerPair& opt) {
    if (!(opt.p >= 0.0) || !(opt.q >= 0.0)) throw Error(Errc::InvalidArgument, "optimal powers must be non-negative");
    GenieParams gp;
    gp.cls = classify(ch);
    switch (gp.cls) {
        case ChannelClass::TwoSided: {
            const auto branches = genie_branches(ch, opt);
            if (branches.empty()) throw Error(Errc::Infeasible, "no genie branch is feasible at this optimum");
            return *std::min_element(branches.begin(), branches.end(), [](const GenieParams& l, const GenieParams& r) {
                return *l.sigma1_sq < *r.sigma1_sq;
            });
        }
        case ChannelClass::OneSidedIntoRx1: {
            const OneSidedGenie g = one_sided_genie(ch.a(), ch.c(), ch.d(), opt.q);
            gp.sigma1_sq = g.sigma_sq;
            gp.rho1 = g.rho;
            return gp;
        }
        case ChannelClass::OneSidedIntoRx2: {
            const OneSidedGenie g = one_sided_genie(ch.b(), ch.d(), ch.c(), opt.p);
            gp.sigma2_sq = g.sigma_sq;
            gp.rho2 = g.rho;
            return gp;
        }
        case ChannelClass::InterferenceFree: break;
    }
    return gp;
}

Rate f_value(const SubChannel& ch, const GenieParams& gp, const PowerPair& pp) {
    if (!(pp.p >= 0.0) || !(pp.q >= 0.0)) throw Error(Errc::InvalidArgument, "powers must be non-negative");
    const double a = ch.a(), b = ch.b(), c = ch.c(), d = ch.d();
    auto need = [](const std::optional<double>& v) {
        if (!v) throw Error(Errc::DomainError, "genie parameters do not match the channel class");
        return *v;
    };
    switch (gp.cls) {
        case ChannelClass::TwoSided:
            return Rate{genie_term(pp.p, pp.q, a, c, need(gp.sigma1_sq), need(gp.rho1)) +
                        genie_term(pp.q, pp.p, b, d, need(gp.sigma2_sq), need(gp.rho2))};
        case ChannelClass::OneSidedIntoRx1:
            return Rate{genie_term(pp.p, pp.q, a, c, need(gp.sigma1_sq), need(gp.rho1)) + 0.5 * std::log1p(d * pp.q)};
        case ChannelClass::OneSidedIntoRx2:
            return Rate{genie_term(pp.q, pp.p, b, d, need(gp.sigma2_sq), need(gp.rho2)) + 0.5 * std::log1p(c * pp.p)};
        case ChannelClass::InterferenceFree: break;
    }
    return Rate{0.5 * std::log1p(c * pp.p) + 0.5 * std::log1p(d * pp.q)};
}

TangencyReport tangency_check(const SubChannel& ch, const GenieParams& gp, const PowerPair& opt) {
    constexpr double h = 1e-6;
    TangencyReport rep;
    rep.value_gap = std::abs(f_value(ch, gp, opt).nats - tin_rate(ch, opt).nats);

    auto derivative = [&](auto&& fn, bool along_p) {
        auto shifted = [&](double t) {
            PowerPair x = opt;
            (along_p ? x.p : x.q) += t;
            return fn(x);
        };
        const double base = along_p ? opt.p : opt.q;
        if (base < h) return (-3.0 * shifted(0.0) + 4.0 * shifted(h) - shifted(2.0 * h)) / (2.0 * h);
        return (shifted(h) - shifted(-h)) / (2.0 * h);
    };
    auto f = [&](const PowerPair& x) { return f_value(ch, gp, x).nats; };
    auto r = [&](const PowerPair& x) { return tin_rate(ch, x).nats; };
    for (bool along_p : {true, false}) {
        rep.grad_gap = std::max(rep.grad_gap, std::abs(derivative(f, along_p) - derivative(r, along_p)));
    }
    return rep;
}

AuditReport bound_audit(const PgicInstance& inst, const Allocation& opt, std::size_t samples, std::uint64_t seed) {
    if (opt.pairs.size() != inst.size()) throw Error(Errc::LengthMismatch, "allocation size mismatch");
    AuditReport rep;
    rep.samples = samples;
    if (samples == 0) return rep;

    const std::size_t m = inst.size();
    std::vector<GenieParams> genie;
    genie.reserve(m);
    double f_opt = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        genie.push_back(genie_params(inst.channel(i), opt.pairs[i]));
        f_opt += f_value(inst.channel(i), genie.back(), opt.pairs[i]).nats;
    }

    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // Uniform point of {x >= 0, sum x <= total}: drop the slack coordinate of a
    // flat Dirichlet draw.
    auto simplex = [&](double total) {
        std::vector<double> w(m + 1);
        double sum = 0.0;
        for (double& v : w) sum += (v = expo(rng));
        w.pop_back();
        for (double& v : w) v = v / sum * total;
        return w;
    };
    const double span_p = std::max(inst.total_p(), 1e-3);
    const double span_q = std::max(inst.total_q(), 1e-3);
    auto random_pair = [&] { return PowerPair{unit(rng) * span_p, unit(rng) * span_q}; };

    rep.worst_bound_margin = std::numeric_limits<double>::infinity();
    rep.worst_concavity_margin = std::numeric_limits<double>::infinity();
    rep.worst_monotone_margin = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < samples; ++s) {
        const std::vector<double> ps = simplex(inst.total_p());
        const std::vector<double> qs = simplex(inst.total_q());
        double f_sample = 0.0;
        for (std::size_t i = 0; i < m; ++i) f_sample += f_value(inst.channel(i), genie[i], {ps[i], qs[i]}).nats;
        rep.worst_bound_margin = std::min(rep.worst_bound_margin, f_opt - f_sample);

        for (std::size_t i = 0; i < m; ++i) {
            const SubChannel& ch = inst.channel(i);
            const PowerPair x = random_pair(), y = random_pair();
            const double lam = unit(rng);
            const PowerPair mix{lam * x.p + (1.0 - lam) * y.p, lam * x.q + (1.0 - lam) * y.q};
            const double fx = f_value(ch, genie[i], x).nats, fy = f_value(ch, genie[i], y).nats;
            rep.worst_concavity_margin =
                std::min(rep.worst_concavity_margin, f_value(ch, genie[i], mix).nats - (lam * fx + (1.0 - lam) * fy));
            const PowerPair up = unit(rng) < 0.5 ? PowerPair{x.p + unit(rng) * span_p, x.q}
                                                 : PowerPair{x.p, x.q + unit(rng) * span_q};
            rep.worst_monotone_margin = std::min(rep.worst_monotone_margin, f_value(ch, genie[i], up).nats - fx);
        }
    }
    if (rep.worst_bound_margin < -1e-8) {
        throw Error(Errc::AuditFailure, "a budget-feasible allocation exceeds the bound at the optimum by " +
                                            std::to_string(-rep.worst_bound_margin));
    }
    if (rep.worst_concavity_margin < -1e-9) throw Error(Errc::AuditFailure, "bound function is not concave");
    if (rep.worst_monotone_margin < -1e-9) throw Error(Errc::AuditFailure, "bound function is decreasing");
    return rep;
}

}  // namespace pgic
