#include "stratkit/pipeline.hpp"
#include "stratkit/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using stratkit::JobSpec;
using stratkit::RunResult;

struct OutputOpts {
    std::string format = "text";
    std::string out_path;
};

void add_output_opts(CLI::App* cmd, OutputOpts& oo) {
    cmd->add_option("--format", oo.format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", oo.out_path, "write the report to a file as well");
}

int emit(const RunResult& res, const OutputOpts& oo) {
    std::string body = oo.format == "json" ? res.doc.dump(2) + "\n" : stratkit::render_text(res.doc);
    std::cout << body;
    if (!oo.out_path.empty()) {
        std::ofstream out(oo.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << oo.out_path << "\n";
            return 2;
        }
        out << body;
    }
    return res.exit_code;
}

std::set<std::string> parse_checks(const std::string& csv) {
    std::set<std::string> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) {
                if (cur == "pairing-suite") cur = "pairing";
                if (cur != "stratify" && cur != "mtm" && cur != "minfd" && cur != "diagonal" &&
                    cur != "pairing" && cur != "sweep")
                    throw stratkit::InputError("unknown check '" + cur + "'");
                out.insert(cur);
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    return out;
}

std::vector<int> parse_order(const std::string& csv) {
    std::vector<int> out;
    std::string cur;
    for (char c : csv + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(stratkit::kToolName) +
                 " - stratifying systems of tau-rigid modules over bound quiver algebras"};
    app.require_subcommand(1);

    // algebra check
    auto* algebra = app.add_subcommand("algebra", "algebra file operations");
    algebra->require_subcommand(1);
    auto* algebra_check = algebra->add_subcommand("check", "build the algebra and print a summary");
    std::string alg_src;
    OutputOpts alg_out;
    algebra_check->add_option("algebra", alg_src, "algebra file or fixture name (EX1, EX2)")->required();
    add_output_opts(algebra_check, alg_out);

    // module check
    auto* module = app.add_subcommand("module", "module file operations");
    module->require_subcommand(1);
    auto* module_check = module->add_subcommand("check", "validate modules against the relations");
    std::string mc_alg;
    std::vector<std::string> mc_mods;
    OutputOpts mc_out;
    std::uint64_t mc_seed = 0;
    module_check->add_option("algebra", mc_alg, "algebra file or fixture name")->required();
    module_check->add_option("module", mc_mods, "module files or constructor names")->required();
    module_check->add_option("--seed", mc_seed, "seed for randomized subroutines");
    add_output_opts(module_check, mc_out);

    // tau
    auto* tau = app.add_subcommand("tau", "translates, g-vectors and the tau-rigidity verdict");
    JobSpec tau_job;
    OutputOpts tau_out;
    tau->add_option("algebra", tau_job.algebra_src, "algebra file or fixture name")->required();
    tau->add_option("module", tau_job.module_srcs, "summands")->required();
    tau->add_option("--seed", tau_job.seed, "seed for randomized subroutines");
    tau->add_option("--budget", tau_job.budget, "search budget");
    add_output_opts(tau, tau_out);

    // stratify / verify
    JobSpec job;
    OutputOpts strat_out;
    std::string order_csv, checks_csv;
    bool auto_order_flag = false;
    auto add_strat_opts = [&](CLI::App* cmd) {
        cmd->add_option("algebra", job.algebra_src, "algebra file or fixture name")->required();
        cmd->add_option("module", job.module_srcs, "summands (files or constructor names)")->required();
        cmd->add_option("--order", order_csv, "explicit TF order, e.g. 1,2,3");
        cmd->add_flag("--auto-order", auto_order_flag, "greedy TF order (default)");
        cmd->add_option("--checks", checks_csv, "comma list: mtm,minfd,diagonal,pairing,sweep");
        cmd->add_option("--seed", job.seed, "seed for randomized subroutines");
        cmd->add_option("--budget", job.budget, "backtracking/search budget");
        cmd->add_option("--workers", job.workers, "worker threads for pairing/sweep checks");
        add_output_opts(cmd, strat_out);
    };
    auto* stratify = app.add_subcommand("stratify", "compute the induced stratifying system and matrices");
    add_strat_opts(stratify);
    auto* verify = app.add_subcommand("verify", "stratify plus every verifier");
    add_strat_opts(verify);

    // selftest
    auto* selftest = app.add_subcommand("selftest", "replay the bundled worked examples and sweeps");
    stratkit::SelftestSpec st;
    OutputOpts st_out;
    selftest->add_option("--seed", st.seed, "seed for randomized subroutines");
    selftest->add_option("--workers", st.workers, "worker threads");
    selftest->add_option("--inject-fault", st.inject_fault,
                         "perturb an expected matrix cell (testing aid), e.g. C:1:3");
    add_output_opts(selftest, st_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (algebra_check->parsed()) return emit(stratkit::cmd_algebra_check(alg_src), alg_out);
        if (module_check->parsed()) return emit(stratkit::cmd_module_check(mc_alg, mc_mods, mc_seed), mc_out);
        if (tau->parsed()) return emit(stratkit::cmd_tau(tau_job), tau_out);
        if (stratify->parsed() || verify->parsed()) {
            if (!order_csv.empty()) {
                job.order = parse_order(order_csv);
                job.auto_order = false;
            }
            if (!checks_csv.empty()) job.checks = parse_checks(checks_csv);
            return emit(stratkit::cmd_stratify(job, verify->parsed()), strat_out);
        }
        if (selftest->parsed()) return emit(stratkit::cmd_selftest(st), st_out);
    } catch (const stratkit::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
