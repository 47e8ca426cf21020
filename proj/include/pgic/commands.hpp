#pragma once

// Subcommand implementations behind the pgic executable. Each writes its
// report to `out`, diagnostics to `err`, and returns the process exit code:
//   0 success, 1 invalid input, 2 outside the power region or conditions not
//   met, 3 internal numerical failure.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace pgic {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitOutside = 2, kExitNumerical = 3 };

int cmd_check(const std::string& instance_path, std::ostream& out, std::ostream& err);

struct SolveOptions {
    bool bits = false;
    std::size_t oracle_steps = 0;   // 0 disables the oracle comparison
    std::size_t audit_samples = 0;  // 0 disables the genie bound audit
    std::uint64_t seed = 1;
};

int cmd_solve(const std::string& instance_path, const SolveOptions& opts, std::ostream& out, std::ostream& err);

// Two symmetric channels with c = d = 1 and a1, a2 each on a uniform inclusive
// grid of `steps` points over [a_min, a_max].
int cmd_sweep_ratio(double a_min, double a_max, std::size_t steps, std::ostream& out, std::ostream& err);

// P-bar of the pair (a1, a2) with c = d = 1, a2 fixed, a1 on a uniform
// inclusive grid over [a1_min, a1_max].
int cmd_sweep_pbar(double a2, double a1_min, double a1_max, std::size_t steps, std::ostream& out,
                   std::ostream& err);

int cmd_regions(const std::string& instance_path, std::size_t resolution, std::ostream& out, std::ostream& err);

}  // namespace pgic
