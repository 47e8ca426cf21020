#include "pgic/allocator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "pgic/error.hpp"

namespace pgic {

namespace {

constexpr int kMaxBisection = 200;
constexpr double kBudgetTolerance = 1e-9;

void require_symmetric(std::span<const SubChannel> channels, bool allow_quarter) {
    if (channels.empty()) throw Error(Errc::InvalidInstance, "no channels");
    for (std::size_t i = 0; i < channels.size(); ++i) {
        const SubChannel& ch = channels[i];
        if (!ch.symmetric() || !(ch.a() > 0.0)) {
            throw Error(Errc::NotSymmetric, "channel " + std::to_string(i) + " is not symmetric with a = b > 0");
        }
        const double ratio = ch.a() / ch.c();
        if (allow_quarter ? ratio > 0.25 : ratio >= 0.25) {
            throw Error(Errc::StrongInterference, "channel " + std::to_string(i) + " has a/c >= 1/4");
        }
    }
}

SymmetricProfile build_profile(std::span<const SubChannel> channels) {
    SymmetricProfile prof;
    prof.order.resize(channels.size());
    std::iota(prof.order.begin(), prof.order.end(), std::size_t{0});
    std::stable_sort(prof.order.begin(), prof.order.end(),
                     [&](std::size_t i, std::size_t j) { return channels[i].c() > channels[j].c(); });
    prof.w.reserve(channels.size());
    for (const SubChannel& ch : channels) {
        prof.w.push_back(symmetric_threshold(ch));
        prof.w_hat = std::max(prof.w_hat, prof.w.back());
        prof.c_hat = std::max(prof.c_hat, ch.c());
    }
    // Channels whose direct gain does not exceed w_hat carry no power at
    // k = w_hat (continuity at k = c_i gives zero there as well).
    for (std::size_t idx : prof.order) {
        if (channels[idx].c() > prof.w_hat) {
            ++prof.r;
            prof.p_bar += symmetric_power(channels[idx], prof.w_hat);
        }
    }
    return prof;
}

double relative_gap(double value, double target) { return std::abs(value - target) / std::max(1.0, std::abs(target)); }

}  // namespace

double symmetric_threshold(const SubChannel& ch) {
    const double gap = std::sqrt(ch.c()) - std::sqrt(ch.a());
    return 4.0 * ch.a() * ch.a() / (gap * gap);
}

double symmetric_noisy_limit(const SubChannel& ch) {
    const double a = ch.a();
    return (std::sqrt(a * ch.c()) - 2.0 * a) / (2.0 * a * a);
}

double symmetric_power(const SubChannel& ch, double k) {
    const double a = ch.a(), c = ch.c();
    if (!(k > 0.0)) throw Error(Errc::InvalidArgument, "symmetric price must be positive");
    if (k >= c) return 0.0;
    // (sqrt(c^2 + 4ac(a+c)/k) - (2a+c)) / (2a(a+c)), rationalized so that it
    // stays accurate for small a and reduces to (c/k - 1)/c at a = 0.
    const double root = std::sqrt(c * c + 4.0 * a * c * (a + c) / k);
    return 2.0 * (c / k - 1.0) / (root + 2.0 * a + c);
}

SymmetricProfile symmetric_profile(std::span<const SubChannel> channels) {
    require_symmetric(channels, false);
    return build_profile(channels);
}

double symmetric_power_limit(std::span<const SubChannel> channels) {
    require_symmetric(channels, true);
    return build_profile(channels).p_bar;
}

Allocation solve_symmetric(std::span<const SubChannel> channels, double total_power) {
    const SymmetricProfile prof = symmetric_profile(channels);
    if (!(total_power >= 0.0)) throw Error(Errc::InvalidArgument, "total power must be non-negative");
    if (total_power > prof.p_bar * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "P = " << total_power << " exceeds the noisy-interference limit " << prof.p_bar;
        throw Error(Errc::PowerOutOfRange, os.str());
    }

    auto total_at = [&](double k) {
        double sum = 0.0;
        for (const SubChannel& ch : channels) sum += symmetric_power(ch, k);
        return sum;
    };

    double k_star = prof.c_hat;
    if (total_power > 0.0) {
        // Sum of powers is continuous and decreasing in k on [w_hat, c_hat].
        double lo = prof.w_hat, hi = prof.c_hat;
        for (int i = 0; i < kMaxBisection; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (total_at(mid) > total_power ? lo : hi) = mid;
        }
        k_star = std::abs(total_at(lo) - total_power) < std::abs(total_at(hi) - total_power) ? lo : hi;
    }

    Allocation alloc;
    alloc.certificate = Subgradient{k_star / 2.0, k_star / 2.0};
    for (const SubChannel& ch : channels) {
        const double p = symmetric_power(ch, k_star);
        alloc.pairs.push_back(PowerPair{p, p});
        alloc.labels.push_back(region_label(alloc.pairs.back()));
        alloc.achieved_rate += tin_rate(ch, alloc.pairs.back());
    }
    return alloc;
}

AggregateDemand aggregate_demand(std::span<const SubChannel> channels, const Subgradient& k) {
    AggregateDemand agg;
    agg.per_channel.reserve(channels.size());
    for (const SubChannel& ch : channels) {
        agg.per_channel.push_back(demand(ch, k));
        agg.total_p += agg.per_channel.back().pp.p;
        agg.total_q += agg.per_channel.back().pp.q;
        agg.all_in_B = agg.all_in_B && agg.per_channel.back().label.has_value();
    }
    return agg;
}

void validate_allocation(const PgicInstance& inst, const Allocation& alloc) {
    if (alloc.pairs.size() != inst.size() || alloc.labels.size() != inst.size()) {
        throw Error(Errc::InvalidArgument, "allocation size does not match the instance");
    }
    double sum_p = 0.0, sum_q = 0.0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const SubChannel& ch = inst.channel(i);
        const PowerPair& pp = alloc.pairs[i];
        if (!in_noisy_region(ch, pp)) {
            throw Error(Errc::InvalidArgument, "channel " + std::to_string(i) + " is outside its noisy region");
        }
        if (!contains(subdifferential(ch, pp), alloc.certificate, 1e-8)) {
            throw Error(Errc::InvalidArgument,
                        "certificate is not a subgradient of channel " + std::to_string(i));
        }
        sum_p += pp.p;
        sum_q += pp.q;
    }
    if (relative_gap(sum_p, inst.total_p()) > kBudgetTolerance ||
        relative_gap(sum_q, inst.total_q()) > kBudgetTolerance) {
        throw Error(Errc::InvalidArgument, "allocation does not exhaust the budgets");
    }
}

namespace {

// Largest price in [lo, hi] with total(price) <= target, where total is
// non-increasing. Assumes total(hi) <= target <= total(lo).
template <typename Total>
double bisect_price(Total&& total, double lo, double hi, double target) {
    for (int i = 0; i < kMaxBisection; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (total(mid) > target ? lo : hi) = mid;
    }
    return hi;
}

// Walks down from hi by halving until total(lo) >= target. Returns 0 when the
// target is not reachable within 2^-80 of hi.
template <typename Total>
double find_lower_price(Total&& total, double hi, double target) {
    double lo = hi;
    for (int i = 0; i < 80; ++i) {
        lo *= 0.5;
        if (!(lo > 0.0)) return 0.0;
        if (total(lo) >= target) return lo;
    }
    return 0.0;
}

}  // namespace

SolveResult solve_general(const PgicInstance& inst) {
    const auto channels = inst.channels();
    for (std::size_t i = 0; i < channels.size(); ++i) {
        if (classify(channels[i]) == ChannelClass::TwoSided && !coefficient_condition(channels[i])) {
            return NotInPowerRegion{"channel " + std::to_string(i) +
                                    " violates sqrt(ac) + sqrt(bd) < sqrt(cd); conditions not met"};
        }
    }

    double kp_top = 0.0, kq_top = 0.0;
    for (const SubChannel& ch : channels) {
        kp_top = std::max(kp_top, ch.c() / 2.0);
        kq_top = std::max(kq_top, ch.d() / 2.0);
    }
    const double P = inst.total_p();
    const double Q = inst.total_q();

    // Demand is the negative gradient of a convex dual function of k, so the
    // budget equations can be solved by nested monotone bisection: the inner
    // search fixes k_p and matches Q, the outer search matches P.
    auto inner_kq = [&](double kp) {
        auto total_q = [&](double kq) { return aggregate_demand(channels, {kp, kq}).total_q; };
        const double lo = find_lower_price(total_q, kq_top, Q);
        if (lo == 0.0) return std::ldexp(kq_top, -80);
        return bisect_price(total_q, lo, kq_top, Q);
    };
    auto total_p = [&](double kp) { return aggregate_demand(channels, {kp, inner_kq(kp)}).total_p; };

    const double kp_lo = find_lower_price(total_p, kp_top, P);
    if (kp_lo == 0.0) {
        return NotInPowerRegion{"budget P is larger than any allocation inside the noisy regions"};
    }
    const double kp_star = bisect_price(total_p, kp_lo, kp_top, P);
    const Subgradient k_star{kp_star, inner_kq(kp_star)};
    const AggregateDemand agg = aggregate_demand(channels, k_star);

    if (relative_gap(agg.total_p, P) > kBudgetTolerance || relative_gap(agg.total_q, Q) > kBudgetTolerance) {
        std::ostringstream os;
        os << "budgets (" << P << ", " << Q << ") are not reachable inside the noisy regions; closest (" << agg.total_p
           << ", " << agg.total_q << ")";
        return NotInPowerRegion{os.str()};
    }
    if (!agg.all_in_B) {
        for (std::size_t i = 0; i < agg.per_channel.size(); ++i) {
            if (!agg.per_channel[i].label) {
                return NotInPowerRegion{"optimal price is outside B for channel " + std::to_string(i) +
                                        " (its optimum presses against the noisy-region edge)"};
            }
        }
    }

    Allocation alloc;
    alloc.certificate = k_star;
    for (std::size_t i = 0; i < channels.size(); ++i) {
        alloc.pairs.push_back(agg.per_channel[i].pp);
        alloc.labels.push_back(*agg.per_channel[i].label);
        alloc.achieved_rate += tin_rate(channels[i], alloc.pairs.back());
    }
    try {
        validate_allocation(inst, alloc);
    } catch (const Error& e) {
        throw Error(Errc::NumericalFailure, std::string("solver produced an invalid certificate: ") + e.what());
    }
    return alloc;
}

std::vector<Activity> activity_table(const PgicInstance& inst, const Allocation& alloc) {
    if (alloc.pairs.size() != inst.size()) throw Error(Errc::LengthMismatch, "allocation size mismatch");
    std::vector<Activity> rows;
    rows.reserve(alloc.pairs.size());
    for (const PowerPair& pp : alloc.pairs) {
        rows.push_back(Activity{pp.p > kActivityThreshold, pp.q > kActivityThreshold});
    }
    return rows;
}

std::string to_string(const Activity& activity) {
    std::string out = "(";
    out += activity.user1 ? '+' : '0';
    out += ',';
    out += activity.user2 ? '+' : '0';
    out += ')';
    return out;
}

std::vector<PowerPair> power_region_boundary(std::span<const SubChannel> channels, std::size_t resolution) {
    if (channels.empty()) throw Error(Errc::InvalidInstance, "no channels");
    if (resolution < 2) throw Error(Errc::InvalidArgument, "resolution must be at least 2");

    // Each B region is upward closed and bounded below by the curve from T'
    // to S' (plus a vertical and a horizontal ray), so the boundary of the
    // intersection is crossed exactly once by every ray from the origin.
    double kp_left = 0.0, kq_bottom = 0.0, top = 0.0;
    for (std::size_t i = 0; i < channels.size(); ++i) {
        const SubChannel& ch = channels[i];
        top = std::max({top, ch.c() / 2.0, ch.d() / 2.0});
        if (classify(ch) != ChannelClass::TwoSided) continue;
        if (!coefficient_condition(ch)) {
            throw Error(Errc::DegenerateRegion, "channel " + std::to_string(i) + " violates the coefficient condition");
        }
        const CornerImages img = corner_images(ch);
        kp_left = std::max(kp_left, img.t.kp);
        kq_bottom = std::max(kq_bottom, img.s.kq);
    }
    if (kp_left == 0.0 || kq_bottom == 0.0) {
        throw Error(Errc::DegenerateRegion, "power region is unbounded without a two-sided channel");
    }

    auto inside = [&](const Subgradient& k) {
        for (const SubChannel& ch : channels) {
            if (!in_B(ch, k)) return false;
        }
        return true;
    };

    const double phi_hi = std::atan2(top, kp_left);
    const double phi_lo = std::atan2(kq_bottom, top);

    std::vector<PowerPair> polyline;
    polyline.reserve(resolution + 2);
    polyline.push_back(PowerPair{0.0, 0.0});
    for (std::size_t j = 0; j < resolution; ++j) {
        const double phi = phi_hi - (phi_hi - phi_lo) * static_cast<double>(j) / static_cast<double>(resolution - 1);
        const double ux = std::cos(phi), uy = std::sin(phi);
        auto at = [&](double t) { return Subgradient{t * ux, t * uy}; };
        double lo = 0.0, hi = 2.0 * top / std::min(ux, uy);
        for (int i = 0; i < 100; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            (inside(at(mid)) ? hi : lo) = mid;
        }
        const AggregateDemand agg = aggregate_demand(channels, at(hi));
        polyline.push_back(PowerPair{agg.total_p, agg.total_q});
    }
    polyline.push_back(PowerPair{0.0, 0.0});
    return polyline;
}

}  // namespace pgic
