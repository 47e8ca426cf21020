#include "pgic/commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

#include "pgic/allocator.hpp"
#include "pgic/error.hpp"
#include "pgic/genie.hpp"
#include "pgic/instance_io.hpp"
#include "pgic/oracle.hpp"
#include "pgic/regions.hpp"

namespace pgic {

namespace {

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::NumericalFailure:
        case Errc::AuditFailure: return kExitNumerical;
        case Errc::DegenerateRegion:
        case Errc::ClassError:
        case Errc::OutsideRegion:
        case Errc::NotSymmetric:
        case Errc::StrongInterference:
        case Errc::PowerOutOfRange:
        case Errc::Infeasible: return kExitOutside;
        default: return kExitInput;
    }
}

// Runs body and converts library errors into exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t steps) {
    std::vector<double> xs;
    if (steps == 1) return {lo};
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
        xs.push_back(i + 1 == steps ? hi : lo + (hi - lo) * t);
    }
    return xs;
}

std::string fmt(double x) { return format_number(x); }

}  // namespace

int cmd_check(const std::string& instance_path, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const PgicInstance inst = load_instance(instance_path);
        bool conditions = true;
        for (std::size_t i = 0; i < inst.size(); ++i) {
            const SubChannel& ch = inst.channel(i);
            const ChannelClass cls = classify(ch);
            out << "channel " << i << ": " << to_string(cls);
            if (cls == ChannelClass::TwoSided) {
                const bool ok = coefficient_condition(ch);
                conditions = conditions && ok;
                out << ", coefficient condition " << (ok ? "holds" : "fails");
                if (ok) {
                    const Corners k = corner_points(ch);
                    out << ", S = (0, " << fmt(k.s.q) << "), T = (" << fmt(k.t.p) << ", 0)";
                }
            }
            out << '\n';
        }
        if (!conditions) {
            out << "conditions not met\n";
            return int{kExitOutside};
        }
        const SolveResult res = solve_general(inst);
        if (const auto* miss = std::get_if<NotInPowerRegion>(&res)) {
            out << "not verified: " << miss->reason << '\n';
            return int{kExitOutside};
        }
        const Allocation& alloc = std::get<Allocation>(res);
        out << "in region: (P, Q) = (" << fmt(inst.total_p()) << ", " << fmt(inst.total_q()) << ")\n";
        out << "certificate k* = (" << fmt(alloc.certificate.kp) << ", " << fmt(alloc.certificate.kq) << ")\n";
        for (std::size_t i = 0; i < inst.size(); ++i) {
            out << "  channel " << i << ": p = " << fmt(alloc.pairs[i].p) << ", q = " << fmt(alloc.pairs[i].q) << ", "
                << to_string(alloc.labels[i]) << '\n';
        }
        out << "sum rate " << fmt(alloc.achieved_rate.nats) << " nats\n";
        return int{kExitOk};
    });
}

int cmd_solve(const std::string& instance_path, const SolveOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const PgicInstance inst = load_instance(instance_path);
        const SolveResult res = solve_general(inst);
        if (const auto* miss = std::get_if<NotInPowerRegion>(&res)) {
            err << "not in the noisy-interference power region: " << miss->reason << '\n';
            return int{kExitOutside};
        }
        const Allocation& alloc = std::get<Allocation>(res);
        auto rate = [&](double nats) { return opts.bits ? Rate{nats}.bits() : nats; };
        const std::string rate_col = opts.bits ? "rate_bits" : "rate_nats";

        out << csv_row({"channel_index", "p_star", "q_star", "region_label", "k_p_star", "k_q_star", rate_col}) << '\n';
        double sum_p = 0.0, sum_q = 0.0;
        for (std::size_t i = 0; i < inst.size(); ++i) {
            const PowerPair& pp = alloc.pairs[i];
            sum_p += pp.p;
            sum_q += pp.q;
            out << csv_row({std::to_string(i), fmt(pp.p), fmt(pp.q), std::string(to_string(alloc.labels[i])),
                            fmt(alloc.certificate.kp), fmt(alloc.certificate.kq),
                            fmt(rate(tin_rate(inst.channel(i), pp).nats))})
                << '\n';
        }
        out << csv_row({"total", fmt(sum_p), fmt(sum_q), "", fmt(alloc.certificate.kp), fmt(alloc.certificate.kq),
                        fmt(rate(alloc.achieved_rate.nats))})
            << '\n';

        if (opts.oracle_steps > 0) {
            const OracleResult orc = grid_search(inst, GridSpec{opts.oracle_steps});
            const OracleComparison cmp = compare(alloc, orc);
            out << '\n'
                << csv_row({"oracle_steps", "solver_" + rate_col, "oracle_" + rate_col, "rate_gap", "delta",
                            "max_distance", "distance_cells", "within_bound"})
                << '\n'
                << csv_row({std::to_string(opts.oracle_steps), fmt(rate(cmp.solver_rate)), fmt(rate(cmp.oracle_rate)),
                            fmt(rate(cmp.rate_gap)), fmt(rate(cmp.delta)), fmt(cmp.max_distance),
                            fmt(cmp.distance_cells), cmp.within_bound ? "true" : "false"})
                << '\n';
        }
        if (opts.audit_samples > 0) {
            const AuditReport rep = bound_audit(inst, alloc, opts.audit_samples, opts.seed);
            out << '\n'
                << csv_row({"audit_samples", "seed", "worst_bound_margin", "worst_concavity_margin",
                            "worst_monotone_margin"})
                << '\n'
                << csv_row({std::to_string(rep.samples), std::to_string(opts.seed), fmt(rep.worst_bound_margin),
                            fmt(rep.worst_concavity_margin), fmt(rep.worst_monotone_margin)})
                << '\n';
        }
        return int{kExitOk};
    });
}

int cmd_sweep_ratio(double a_min, double a_max, std::size_t steps, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (steps < 1) throw Error(Errc::RangeError, "steps must be at least 1");
        if (!(a_min > 0.0) || !(a_max < 0.25) || !(a_min <= a_max) || (steps > 1 && a_min == a_max)) {
            throw Error(Errc::RangeError, "need 0 < a_min < a_max < 0.25");
        }
        const std::vector<double> grid = uniform_grid(a_min, a_max, steps);
        out << csv_row({"a1", "a2", "p_bar", "s1_plus_s2", "ratio"}) << '\n';
        for (double a1 : grid) {
            for (double a2 : grid) {
                const std::vector<SubChannel> pair{SubChannel(a1, a1, 1.0, 1.0), SubChannel(a2, a2, 1.0, 1.0)};
                const double p_bar = symmetric_profile(pair).p_bar;
                const double s = symmetric_noisy_limit(pair[0]) + symmetric_noisy_limit(pair[1]);
                out << csv_row({fmt(a1), fmt(a2), fmt(p_bar), fmt(s), fmt(p_bar / s)}) << '\n';
            }
        }
        return int{kExitOk};
    });
}

int cmd_sweep_pbar(double a2, double a1_min, double a1_max, std::size_t steps, std::ostream& out,
                   std::ostream& err) {
    return guarded(err, [&] {
        if (steps < 1) throw Error(Errc::RangeError, "steps must be at least 1");
        auto valid = [](double a) { return a > 0.0 && a <= 0.25; };
        if (!valid(a2) || !valid(a1_min) || !valid(a1_max) || !(a1_min <= a1_max) ||
            (steps > 1 && a1_min == a1_max)) {
            throw Error(Errc::RangeError, "a1 range and a2 must lie in (0, 0.25]");
        }
        out << csv_row({"a1", "p_bar"}) << '\n';
        for (double a1 : uniform_grid(a1_min, a1_max, steps)) {
            const std::vector<SubChannel> pair{SubChannel(a1, a1, 1.0, 1.0), SubChannel(a2, a2, 1.0, 1.0)};
            out << csv_row({fmt(a1), fmt(symmetric_power_limit(pair))}) << '\n';
        }
        return int{kExitOk};
    });
}

int cmd_regions(const std::string& instance_path, std::size_t resolution, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (resolution < 3) throw Error(Errc::RangeError, "resolution must be at least 3");
        const PgicInstance inst = load_instance(instance_path);
        double top = 0.0;
        for (std::size_t i = 0; i < inst.size(); ++i) {
            const SubChannel& ch = inst.channel(i);
            if (classify(ch) != ChannelClass::TwoSided) {
                throw Error(Errc::ClassError, "regions needs two-sided channels; channel " + std::to_string(i) +
                                                  " is " + std::string(to_string(classify(ch))));
            }
            if (!coefficient_condition(ch)) {
                err << "conditions not met for channel " << i << '\n';
                return int{kExitOutside};
            }
            top = std::max({top, ch.c() / 2.0, ch.d() / 2.0});
        }
        const double extent = 1.5 * top;

        out << csv_row({"record", "channel", "index", "x", "y", "region", "activity"}) << '\n';
        auto curve = [&](const std::string& record, std::size_t ch, const std::vector<Subgradient>& pts) {
            for (std::size_t j = 0; j < pts.size(); ++j) {
                out << csv_row({record, std::to_string(ch), std::to_string(j), fmt(pts[j].kp), fmt(pts[j].kq), "", ""})
                    << '\n';
            }
        };
        for (std::size_t i = 0; i < inst.size(); ++i) {
            const BOutline outline = b_outline(inst.channel(i), resolution, extent);
            curve("b_outer", i, outline.outer);
            curve("b_ot", i, outline.ot_curve);
            curve("b_os", i, outline.os_curve);
        }

        const std::vector<PowerPair> boundary = power_region_boundary(inst.channels(), resolution);
        for (std::size_t j = 0; j < boundary.size(); ++j) {
            out << csv_row({"power_boundary", "", std::to_string(j), fmt(boundary[j].p), fmt(boundary[j].q), "", ""})
                << '\n';
        }

        const std::vector<SubRegion> regions = label_subregions(inst.channels(), resolution, extent);
        std::size_t index = 0;
        for (const SubRegion& r : regions) {
            const PgicInstance at = inst.with_budgets(r.budgets.p, r.budgets.q);
            const SolveResult res = solve_general(at);
            std::string activity = "n/a";
            if (const auto* alloc = std::get_if<Allocation>(&res)) {
                activity.clear();
                for (const Activity& row : activity_table(at, *alloc)) {
                    if (!activity.empty()) activity += ' ';
                    activity += to_string(row);
                }
            }
            out << csv_row({"subregion_price", "", std::to_string(index), fmt(r.representative.kp),
                            fmt(r.representative.kq), subregion_name(r.labels), ""})
                << '\n';
            out << csv_row({"subregion", "", std::to_string(index), fmt(r.budgets.p), fmt(r.budgets.q),
                            subregion_name(r.labels), activity})
                << '\n';
            ++index;
        }
        return int{kExitOk};
    });
}

}  // namespace pgic
