#pragma once

#include "stratkit/report.hpp"
#include "stratkit/strat.hpp"

#include <set>

namespace stratkit {

struct JobSpec {
    std::string algebra_src;
    std::vector<std::string> module_srcs;
    std::optional<std::vector<int>> order;  // 1-based positions into module_srcs
    bool auto_order = true;
    std::set<std::string> checks;  // mtm, minfd, diagonal, pairing, sweep
    std::uint64_t seed = 0;
    long long budget = 10000;
    int workers = 1;
};

struct RunResult {
    int exit_code = 0;
    ojson doc;
};

struct SelftestSpec {
    std::uint64_t seed = 0;
    int workers = 1;
    std::string inject_fault;  // "C:i:j" style, testing aid
};

RunResult cmd_algebra_check(const std::string& src);
RunResult cmd_module_check(const std::string& algebra_src, const std::vector<std::string>& modules,
                           std::uint64_t seed);
RunResult cmd_tau(const JobSpec& job);
RunResult cmd_stratify(const JobSpec& job, bool verify_all);
RunResult cmd_selftest(const SelftestSpec& spec);

struct PairingSummary {
    int pairs = 0;
    bool pass = true;
    std::string first_failure;
};
// the g-vector pairing identity over the bundled module zoos
PairingSummary run_pairing_suite(std::uint64_t seed, int workers);

struct SweepSummary {
    int candidates = 0;
    int basic_tau_rigid = 0;
    int orders_checked = 0;
    int filtered_yes = 0;  // orders with M verified Delta-filtered
    bool pass = true;
    std::string first_failure;
};
// every basic tau-rigid direct sum from the EX1 zoo, every TF-admissible
// order, full invariant suite
SweepSummary run_sweep(std::uint64_t seed, int workers, long long budget);

}  // namespace stratkit
