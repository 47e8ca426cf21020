#pragma once

// Brute-force reference: exhaustive search of the TIN sum rate over
// exact-budget grids.

#include <cstddef>
#include <vector>

#include "pgic/allocator.hpp"
#include "pgic/capacity.hpp"
#include "pgic/model.hpp"

namespace pgic {

inline constexpr double kMaxGridEvaluations = 1e8;

struct GridSpec {
    std::size_t steps_per_axis = 64;
};

struct OracleResult {
    std::vector<PowerPair> best;
    Rate best_rate;
    double step = 0.0;   // grid spacing, max(P, Q) / steps
    double delta = 0.0;  // resolution bound step * sum (c + d) / 2
    std::size_t evaluations = 0;
};

// Enumerates every split of P and of Q into m multiples of P/steps and
// Q/steps (the last channel takes the remainder so the sums are exact) and
// keeps the best total TIN rate. Ties keep the first point in lexicographic
// order. Throws Error{GridTooLarge} past kMaxGridEvaluations and
// Error{InvalidArgument} if steps < 2.
OracleResult grid_search(const PgicInstance& inst, const GridSpec& grid);

struct OracleComparison {
    double solver_rate = 0.0;
    double oracle_rate = 0.0;
    double rate_gap = 0.0;       // oracle - solver
    double delta = 0.0;
    double max_distance = 0.0;   // max over channels and users of |solver - oracle|
    double distance_cells = 0.0; // max_distance / step
    bool within_bound = false;   // solver + 1e-9 >= oracle - delta
};

OracleComparison compare(const Allocation& solver, const OracleResult& oracle);

}  // namespace pgic
