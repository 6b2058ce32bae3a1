// bdc: homotopy types of bounded degree complexes.
//
//   bdc compute [FILE]          one instance (file or stdin) -> result JSON
//   bdc batch FILE              JSON-lines in, JSON-lines out, input order kept
//   bdc verify FAMILY           sweep a family against the homology oracle
//   bdc generate FAMILY         print an instance JSON
//
// Exit codes: 0 success, 1 an instance failed, 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bdc/cli/batch.hpp"
#include "bdc/cli/cache_file.hpp"
#include "bdc/cli/compute.hpp"
#include "bdc/cli/verify.hpp"
#include "bdc/error.hpp"

namespace {

using namespace bdc;
using namespace bdc::cli;

std::optional<CacheFile> open_cache(MemoCache& cache) {
    const char* path = std::getenv(cache_env_var);
    if (path == nullptr || *path == '\0') return std::nullopt;
    CacheFile file(path);
    file.load(cache, std::cerr);
    return file;
}

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_compute(const std::string& path, const ComputeOptions& options, const std::string& output) {
    std::string text;
    if (path.empty() || path == "-") {
        text = read_all(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "cannot open " << path << '\n';
            return 2;
        }
        text = read_all(in);
    }
    try {
        const ParsedInstance p = parse_instance_text(text);
        const ComputeResult r = compute(p, options);
        if (output == "table") {
            std::cout << result_table(p, r);
        } else {
            std::cout << result_json(p, r).dump() << '\n';
        }
        return (r.agreement && !*r.agreement) ? 1 : 0;
    } catch (const std::exception& e) {
        std::cerr << error_json(e).dump() << '\n';
        return 1;
    }
}

int run_generate(const std::string& family, std::size_t n, const std::vector<int>& m,
                 const std::vector<int>& lambda) {
    try {
        json j;
        if (family == "path") {
            j = explicit_json(gen_path(n), DegreeBounds(lambda));
            check_bounds(gen_path(n), DegreeBounds(lambda));
        } else if (family == "cycle") {
            check_bounds(gen_cycle(n), DegreeBounds(lambda));
            j = cycle_json(n, DegreeBounds(lambda));
        } else if (family == "caterpillar") {
            CaterpillarSpec spec{m, lambda};
            spec.validate();
            j = caterpillar_json(spec);
        } else {
            throw Error(ErrorCode::InvalidParams, "unknown family '" + family + "'");
        }
        std::cout << j.dump() << '\n';
        return 0;
    } catch (const std::exception& e) {
        std::cerr << error_json(e).dump() << '\n';
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homotopy types of bounded degree complexes of graphs"};
    app.require_subcommand(1);

    std::string method = "auto";
    std::size_t face_cap = default_face_cap;
    std::size_t jobs = 1;
    std::string output = "json";
    bool check = false;
    bool timings = false;

    auto add_compute_flags = [&](CLI::App* cmd) {
        cmd->add_option("--method", method, "auto | recursion | closed-form | homology")
            ->check(CLI::IsMember({"auto", "recursion", "closed-form", "homology"}));
        cmd->add_option("--face-cap", face_cap, "maximum faces when building a complex")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--check", check, "also run the homology oracle and report agreement");
        cmd->add_flag("--timings", timings, "include per-phase timings in milliseconds");
    };

    auto* compute_cmd = app.add_subcommand("compute", "homotopy type of one instance");
    std::string compute_path;
    compute_cmd->add_option("file", compute_path, "instance JSON (default: stdin)");
    add_compute_flags(compute_cmd);
    compute_cmd->add_option("--output", output, "json | table")->check(CLI::IsMember({"json", "table"}));

    auto* batch_cmd = app.add_subcommand("batch", "one instance per line -> one result per line");
    std::string batch_path;
    batch_cmd->add_option("file", batch_path, "JSON-lines file (- for stdin)")->required();
    add_compute_flags(batch_cmd);
    batch_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "sweep a family against the homology oracle");
    Sweep sweep;
    std::string family;
    verify_cmd->add_option("family", family, "forests | caterpillars | cycles | random | matching")
        ->required()
        ->check(CLI::IsMember({"forests", "caterpillars", "cycles", "random", "matching"}));
    verify_cmd->add_option("--max-edges", sweep.max_edges, "forests/random: edge limit");
    verify_cmd->add_option("--max-bound", sweep.max_bound, "largest degree bound");
    verify_cmd->add_option("--min-n", sweep.min_n, "smallest spine or cycle length");
    verify_cmd->add_option("--max-n", sweep.max_n, "largest spine or cycle length");
    verify_cmd->add_option("--min-m", sweep.min_m, "fewest leaves per spine vertex");
    verify_cmd->add_option("--max-m", sweep.max_m, "most leaves per spine vertex");
    verify_cmd->add_option("--min-k", sweep.min_k, "matching: smallest k");
    verify_cmd->add_option("--max-k", sweep.max_k, "matching: largest k");
    verify_cmd->add_option("--count", sweep.count, "random: number of instances");
    verify_cmd->add_option("--seed", sweep.seed, "random: seed");
    verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--output", output, "json | table")->check(CLI::IsMember({"json", "table"}));

    auto* generate_cmd = app.add_subcommand("generate", "print an instance JSON");
    std::string gen_family;
    std::size_t gen_n = 0;
    std::vector<int> gen_m, gen_lambda;
    generate_cmd->add_option("family", gen_family, "path | cycle | caterpillar")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "caterpillar"}));
    generate_cmd->add_option("--n", gen_n, "vertex count (path, cycle)");
    generate_cmd->add_option("--m", gen_m, "leaf counts (caterpillar)")->delimiter(',');
    generate_cmd->add_option("--lambda", gen_lambda, "degree bounds")->delimiter(',')->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    MemoCache cache;
    ComputeOptions options;
    options.method = parse_method(method);
    options.face_cap = face_cap;
    options.check = check;
    options.timings = timings;
    options.cache = &cache;

    if (*compute_cmd) {
        auto file = open_cache(cache);
        const int rc = run_compute(compute_path, options, output);
        if (file) file->save(cache);
        return rc;
    }
    if (*batch_cmd) {
        auto file = open_cache(cache);
        std::size_t errors = 0;
        if (batch_path == "-") {
            errors = run_batch(std::cin, std::cout, options, jobs);
        } else {
            std::ifstream in(batch_path);
            if (!in) {
                std::cerr << "cannot open " << batch_path << '\n';
                return 2;
            }
            errors = run_batch(in, std::cout, options, jobs);
        }
        if (file) file->save(cache);
        return errors == 0 ? 0 : 1;
    }
    if (*verify_cmd) {
        sweep.family = parse_family(family);
        auto file = open_cache(cache);
        const VerifyReport report = run_verify(sweep, jobs, &cache);
        if (file) file->save(cache);
        if (output == "table") {
            std::cout << "family        " << report.family << '\n'
                      << "instances     " << report.instances << '\n'
                      << "agreements    " << report.agreements << '\n'
                      << "mismatches    " << report.mismatches << '\n'
                      << "torsion       " << report.torsion << '\n'
                      << "errors        " << report.errors << '\n';
            if (report.first_counterexample) {
                std::cout << "first failure " << report.first_counterexample->dump() << "\n              "
                          << *report.first_failure << '\n';
            }
        } else {
            std::cout << report.to_json().dump() << '\n';
        }
        return report.ok() ? 0 : 1;
    }
    if (*generate_cmd) return run_generate(gen_family, gen_n, gen_m, gen_lambda);
    return 2;
}
