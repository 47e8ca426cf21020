#include "pgic/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pgic/error.hpp"

namespace pgic {

namespace {

// Number of ways to write n as an ordered sum of k non-negative parts.
double compositions(std::size_t n, std::size_t k) {
    double out = 1.0;
    for (std::size_t i = 1; i < k; ++i) out *= static_cast<double>(n + i) / static_cast<double>(i);
    return out;
}

// Calls fn(parts) for every composition of n into parts.size() parts, in
// lexicographic order; the last part takes the remainder.
template <typename Fn>
void compositions_rec(std::vector<std::size_t>& parts, std::size_t pos, std::size_t remaining, Fn& fn) {
    if (pos + 1 == parts.size()) {
        parts[pos] = remaining;
        fn(parts);
        return;
    }
    for (std::size_t v = 0; v <= remaining; ++v) {
        parts[pos] = v;
        compositions_rec(parts, pos + 1, remaining - v, fn);
    }
}

template <typename Fn>
void for_each_composition(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> parts(k, 0);
    compositions_rec(parts, 0, n, fn);
}

}  // namespace

OracleResult grid_search(const PgicInstance& inst, const GridSpec& grid) {
    if (grid.steps_per_axis < 2) throw Error(Errc::InvalidArgument, "steps_per_axis must be at least 2");
    const std::size_t m = inst.size();
    const std::size_t n = grid.steps_per_axis;
    const double count = compositions(n, m) * compositions(n, m);
    if (count > kMaxGridEvaluations) {
        throw Error(Errc::GridTooLarge, "grid needs " + std::to_string(count) + " evaluations");
    }
    const double P = inst.total_p(), Q = inst.total_q();
    const double dp = P / static_cast<double>(n), dq = Q / static_cast<double>(n);

    OracleResult res;
    res.step = std::max(P, Q) / static_cast<double>(n);
    for (const SubChannel& ch : inst.channels()) res.delta += ch.c() + ch.d();
    res.delta *= res.step / 2.0;
    res.best_rate.nats = -std::numeric_limits<double>::infinity();

    auto split = [](const std::vector<std::size_t>& parts, double unit, double total) {
        std::vector<double> x(parts.size());
        double used = 0.0;
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            x[i] = static_cast<double>(parts[i]) * unit;
            used += x[i];
        }
        x.back() = std::max(0.0, total - used);
        return x;
    };

    std::vector<PowerPair> current(m);
    for_each_composition(n, m, [&](const std::vector<std::size_t>& pparts) {
        const std::vector<double> ps = split(pparts, dp, P);
        for_each_composition(n, m, [&](const std::vector<std::size_t>& qparts) {
            const std::vector<double> qs = split(qparts, dq, Q);
            double rate = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                current[i] = PowerPair{ps[i], qs[i]};
                rate += tin_rate(inst.channel(i), current[i]).nats;
            }
            ++res.evaluations;
            if (rate > res.best_rate.nats) {
                res.best_rate.nats = rate;
                res.best = current;
            }
        });
    });
    return res;
}

OracleComparison compare(const Allocation& solver, const OracleResult& oracle) {
    if (solver.pairs.size() != oracle.best.size()) throw Error(Errc::LengthMismatch, "allocation size mismatch");
    OracleComparison cmp;
    cmp.solver_rate = solver.achieved_rate.nats;
    cmp.oracle_rate = oracle.best_rate.nats;
    cmp.rate_gap = cmp.oracle_rate - cmp.solver_rate;
    cmp.delta = oracle.delta;
    for (std::size_t i = 0; i < solver.pairs.size(); ++i) {
        cmp.max_distance = std::max({cmp.max_distance, std::abs(solver.pairs[i].p - oracle.best[i].p),
                                     std::abs(solver.pairs[i].q - oracle.best[i].q)});
    }
    cmp.distance_cells = oracle.step > 0.0 ? cmp.max_distance / oracle.step : 0.0;
    cmp.within_bound = cmp.solver_rate + 1e-9 >= cmp.oracle_rate - cmp.delta;
    return cmp;
}

}  // namespace pgic
