#pragma once

// Small random generators for property tests. Everything is driven by an
// explicit seed so failures can be replayed.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pgic/allocator.hpp"
#include "pgic/model.hpp"

namespace pgic::testgen {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin() { return uniform(0.0, 1.0) < 0.5; }

    // Two-sided channel that satisfies the coefficient condition with some room.
    SubChannel two_sided() {
        while (true) {
            const double c = log_uniform(0.3, 10.0);
            const double d = log_uniform(0.3, 10.0);
            const double a = uniform(0.01, 0.5) * d;
            const double b = uniform(0.01, 0.5) * c;
            const SubChannel ch(a, b, c, d);
            const double gap = std::sqrt(c * d) - std::sqrt(a * c) - std::sqrt(b * d);
            if (gap > 0.05 * std::sqrt(c * d)) return ch;
        }
    }

    SubChannel one_sided() {
        const double c = log_uniform(0.3, 10.0);
        const double d = log_uniform(0.3, 10.0);
        if (coin()) return SubChannel(uniform(0.05, 0.9) * d, 0.0, c, d);
        return SubChannel(0.0, uniform(0.05, 0.9) * c, c, d);
    }

    SubChannel any_channel() {
        const std::size_t pick = index(6);
        if (pick < 4) return two_sided();
        if (pick < 5) return one_sided();
        return SubChannel(0.0, 0.0, log_uniform(0.3, 10.0), log_uniform(0.3, 10.0));
    }

    // a = b, c = d with a/c strictly below 1/4.
    SubChannel symmetric() {
        const double c = log_uniform(0.3, 5.0);
        return symmetric_with(c, uniform(0.005, 0.24) * c);
    }
    static SubChannel symmetric_with(double c, double a) { return SubChannel(a, a, c, c); }

    // Uniform point of the open triangle O-S-T of a two-sided channel, pulled
    // in from the edges by `margin` (fraction of the barycentric range).
    PowerPair interior_point(const SubChannel& ch, double margin = 1e-3) {
        const Corners k = corner_points(ch);
        double u, v;
        do {
            u = uniform(0.0, 1.0);
            v = uniform(0.0, 1.0);
        } while (u + v > 1.0 - margin || u < margin || v < margin);
        return PowerPair{u * k.t.p, v * k.s.q};
    }

    // Point of the triangle's bounding box scaled by `stretch`, so a share of
    // the samples falls outside the region.
    PowerPair box_point(const SubChannel& ch, double stretch) {
        const Corners k = corner_points(ch);
        return PowerPair{uniform(0.0, stretch * k.t.p), uniform(0.0, stretch * k.s.q)};
    }

    // Interior point for any class: triangle for two-sided channels, a box
    // otherwise.
    PowerPair positive_point(const SubChannel& ch) {
        if (classify(ch) == ChannelClass::TwoSided) return interior_point(ch);
        return PowerPair{log_uniform(1e-3, 5.0), log_uniform(1e-3, 5.0)};
    }

    // In-region budgets: draw a price vector inside every B region and total
    // up what the channels demand there.
    PgicInstance in_region_instance(std::size_t m, bool two_sided_only = false) {
        while (true) {
            std::vector<SubChannel> chans;
            double top = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                chans.push_back(two_sided_only ? two_sided() : any_channel());
                top = std::max({top, chans.back().c() / 2.0, chans.back().d() / 2.0});
            }
            for (int attempt = 0; attempt < 200; ++attempt) {
                const Subgradient k{log_uniform(0.05 * top, 1.2 * top), log_uniform(0.05 * top, 1.2 * top)};
                const AggregateDemand agg = aggregate_demand(chans, k);
                if (!agg.all_in_B) continue;
                if (agg.total_p < 1e-3 || agg.total_q < 1e-3) continue;
                return PgicInstance(chans, agg.total_p, agg.total_q);
            }
        }
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace pgic::testgen
