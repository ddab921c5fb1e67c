// orbitcode command-line tool: builds and verifies binary codes that are
// unions of permutation-group orbits on doublewords.
//
// Pipeline subcommands read and write the text formats documented in
// docs/FORMATS.md. Per-stage timing goes to stderr, results to stdout.
// Exit codes: 0 success, 1 claim mismatch, 2 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "orbitcode/orbitcode.hpp"

namespace {

using namespace orbitcode;
using Clock = std::chrono::steady_clock;

constexpr int kExitSuccess = 0;
constexpr int kExitClaimMismatch = 1;
constexpr int kExitInputError = 2;

// Thrown when a --size/--d style claim does not hold; mapped to exit code 1.
class ClaimMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Stage {
public:
    explicit Stage(std::string name) : name_(std::move(name)), start_(Clock::now()) {}
    void done(const std::string& info) {
        double seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        std::ostringstream line;
        line << "[" << name_ << "] " << info << " (" << std::fixed << std::setprecision(2)
             << seconds << " s)\n";
        std::cerr << line.str();
    }

private:
    std::string name_;
    Clock::time_point start_;
};

struct GroupOptions {
    std::string path;
    int n = 0;  // 0: take it from the group file
};

struct SolverOptions {
    bool heuristic = false;
    std::uint64_t iterations = 10000;
    std::uint64_t seed = 1;
    double time_limit = 60.0;
    std::uint64_t node_limit = 0;
};

void add_group_options(CLI::App* cmd, GroupOptions& opts) {
    cmd->add_option("--group", opts.path, "group file (degree, optional n, generators)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--n", opts.n, "codeword length n (group degree is 2n)");
}

void add_solver_options(CLI::App* cmd, SolverOptions& opts) {
    cmd->add_flag("--heuristic", opts.heuristic, "randomized greedy instead of exact search");
    cmd->add_option("--iterations", opts.iterations, "heuristic restarts (default 10000)");
    cmd->add_option("--seed", opts.seed, "heuristic RNG seed (default 1)");
    cmd->add_option("--time-limit", opts.time_limit,
                    "exact solver time limit in seconds, <= 0 unlimited (default 60)");
    cmd->add_option("--node-limit", opts.node_limit,
                    "exact solver node limit, 0 unlimited (default 0)");
}

// Resolves n from the file and/or the flag; checks degree and compatibility.
std::pair<PermutationGroup, int> load_group(const GroupOptions& opts) {
    Stage stage("group");
    GroupFile file = load_group_file(opts.path);
    int n = opts.n;
    if (file.n) {
        if (n != 0 && n != *file.n)
            throw FormatError(opts.path + ": --n " + std::to_string(n) +
                              " contradicts the file's n " + std::to_string(*file.n));
        n = *file.n;
    }
    if (n == 0)
        throw FormatError(opts.path + ": no n line in the file; pass --n");
    if (file.group.degree() != 2 * n)
        throw FormatError(opts.path + ": group degree " + std::to_string(file.group.degree()) +
                          " is not 2n for n=" + std::to_string(n));
    if (!file.group.is_doubleword_compatible())
        throw FormatError(opts.path + ": group is not doubleword-compatible");
    stage.done("degree " + std::to_string(file.group.degree()) + ", " +
               std::to_string(file.group.generators().size()) + " generators, n=" +
               std::to_string(n));
    return {std::move(file.group), n};
}

std::vector<Doubleword> load_seeds(const std::string& path, int n) {
    Stage stage("seeds");
    auto seeds = load_seeds_file(path);
    if (seeds.empty()) throw FormatError(path + ": no orbit representatives");
    if (seeds.front().half_length() != n)
        throw FormatError(path + ": seed length " + std::to_string(seeds.front().length()) +
                          " does not match 2n=" + std::to_string(2 * n));
    stage.done(std::to_string(seeds.size()) + " representatives");
    return seeds;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError(path + ": cannot open for writing");
    return out;
}

void print_report(std::ostream& out, const VerificationReport& report,
                  const std::string& key_prefix = "") {
    out << "# verification mode="
        << (report.mode == VerifyMode::orbit_reduced ? "orbit_reduced" : "full_pairwise")
        << "\n";
    for (const auto& orbit : report.per_orbit)
        out << "# orbit rep=" << orbit.rep.to_string() << " size=" << orbit.size
            << " mindist=" << format_distance(orbit.min_distance) << "\n";
    out << key_prefix << "length=" << report.length << "\n";
    out << key_prefix << "size=" << report.size << "\n";
    out << key_prefix << "mindist=" << format_distance(report.min_distance) << "\n";
    if (report.min_distance != kInfiniteDistance) {
        out << key_prefix << "witness_a=" << Codeword(report.length, report.witnesses.a).to_string()
            << "\n";
        out << key_prefix << "witness_b=" << Codeword(report.length, report.witnesses.b).to_string()
            << "\n";
    }
}

void check_claim(const char* what, std::uint64_t actual, std::optional<std::uint64_t> claim) {
    if (claim && *claim != actual)
        throw ClaimMismatch(std::string(what) + " is " + std::to_string(actual) +
                            ", claimed " + std::to_string(*claim));
}

CliqueResult run_solver(const CompatibilityGraph& graph, const SolverOptions& opts) {
    Stage stage("clique");
    CliqueResult result;
    if (opts.heuristic)
        result = max_weight_clique_heuristic(graph, {opts.iterations, opts.seed});
    else
        result = max_weight_clique_exact(graph, {opts.time_limit, opts.node_limit});
    std::ostringstream info;
    info << "weight " << result.weight << ", " << result.members.size() << " members, "
         << (result.optimal ? "optimal" : "not proven optimal") << ", "
         << result.stats.nodes_expanded << " nodes";
    stage.done(info.str());
    if (!result.optimal && !opts.heuristic)
        std::cerr << "[clique] budget exhausted; result is the best clique found\n";
    return result;
}

// verify: assemble from group+reps (or re-check a code file) and test claims.
struct VerifyArgs {
    GroupOptions group;
    std::string reps_path;
    std::string code_path;
    std::optional<std::uint64_t> size_claim;
    std::optional<int> d_claim;
    std::optional<int> extended_d_claim;
    bool extend = false;
    int threads = 0;
};

int cmd_verify(const VerifyArgs& args) {
    if (!args.code_path.empty()) {
        Stage stage("verify");
        CodeFileData data = load_code_file(args.code_path);
        auto report = verify_full_pairwise(data.code, args.threads);
        stage.done(std::to_string(report.size) + " words, mindist " +
                   format_distance(report.min_distance));
        print_report(std::cout, report);
        if (report.min_distance != data.header_min_distance)
            throw ClaimMismatch("file header claims mindist=" +
                                format_distance(data.header_min_distance) + " but the code has " +
                                format_distance(report.min_distance));
        check_claim("size", report.size, args.size_claim);
        if (args.d_claim && report.min_distance != *args.d_claim)
            throw ClaimMismatch("mindist is " + format_distance(report.min_distance) +
                                ", claimed " + std::to_string(*args.d_claim));
        return kExitSuccess;
    }

    auto [group, n] = load_group(args.group);
    auto seeds = load_seeds(args.reps_path, n);
    Stage assemble_stage("assemble");
    auto assembled = assemble_code(group, seeds);
    assemble_stage.done(std::to_string(assembled.code.size()) + " words from " +
                        std::to_string(assembled.orbits.size()) + " orbits");
    Stage verify_stage("verify");
    auto report = verify_assembled(group, assembled, args.threads);
    verify_stage.done("mindist " + format_distance(report.min_distance));
    print_report(std::cout, report);
    check_claim("size", report.size, args.size_claim);
    if (args.d_claim && report.min_distance != *args.d_claim)
        throw ClaimMismatch("mindist is " + format_distance(report.min_distance) + ", claimed " +
                            std::to_string(*args.d_claim));

    if (args.extend) {
        Stage extend_stage("extend");
        Code base = assembled.code;
        base.claimed_min_distance = report.min_distance;
        Code extended = extend_parity(base);
        auto extended_report = verify_full_pairwise(extended, args.threads);
        extend_stage.done("length " + std::to_string(extended.length) + ", mindist " +
                          format_distance(extended_report.min_distance));
        print_report(std::cout, extended_report, "extended_");
        if (args.extended_d_claim && extended_report.min_distance != *args.extended_d_claim)
            throw ClaimMismatch("extended mindist is " +
                                format_distance(extended_report.min_distance) + ", claimed " +
                                std::to_string(*args.extended_d_claim));
    }
    return kExitSuccess;
}

// search: orbits (seed file or enumeration) -> graph -> clique -> assemble
// -> verify -> write.
struct SearchArgs {
    GroupOptions group;
    std::string reps_path;
    int d = 0;
    EnumerateOptions enumerate;
    SolverOptions solver;
    std::string out_path;
    int threads = 0;
};

int cmd_search(const SearchArgs& args) {
    auto [group, n] = load_group(args.group);
    Stage enum_stage("orbits");
    std::vector<Orbit> orbits;
    if (!args.reps_path.empty()) {
        for (const auto& seed : load_seeds(args.reps_path, n))
            orbits.push_back(compute_orbit(group, seed));
        enum_stage.done(std::to_string(orbits.size()) + " orbits from seeds");
    } else {
        orbits = enumerate_orbit_reps(group, args.enumerate);
        enum_stage.done(std::to_string(orbits.size()) + " orbits over 2^" + std::to_string(n) +
                        " words");
    }
    Stage graph_stage("graph");
    auto graph = build_graph(group, orbits, args.d, args.threads);
    graph_stage.done(std::to_string(graph.nodes.size()) + " nodes, " +
                     std::to_string(graph.edge_count()) + " edges");
    auto result = run_solver(graph, args.solver);

    std::cout << "clique_weight=" << result.weight << "\n";
    std::cout << "optimal=" << (result.optimal ? 1 : 0) << "\n";
    std::cout << "orbits=" << result.members.size() << "\n";
    if (result.members.empty()) {
        std::cerr << "search found no admissible orbit\n";
        return kExitClaimMismatch;
    }

    std::vector<Doubleword> reps;
    reps.reserve(result.members.size());
    for (int index : result.members)
        reps.push_back(Doubleword::parse(graph.nodes[static_cast<std::size_t>(index)].label));
    Stage assemble_stage("assemble");
    auto assembled = assemble_code(group, reps);
    assemble_stage.done(std::to_string(assembled.code.size()) + " words");
    if (assembled.code.size() != result.weight)
        throw std::logic_error("assembled size does not match the clique weight");

    Stage verify_stage("verify");
    auto report = verify_assembled(group, assembled, args.threads);
    verify_stage.done("mindist " + format_distance(report.min_distance));
    if (report.min_distance < args.d)
        throw std::logic_error("assembled code misses the target distance");
    print_report(std::cout, report);

    if (!args.out_path.empty()) {
        auto out = open_output(args.out_path);
        write_code_file(out, assembled.code, report.min_distance);
    }
    return kExitSuccess;
}

// orbits: seeds or a full enumeration -> orbit list.
struct OrbitsArgs {
    GroupOptions group;
    std::string reps_path;
    EnumerateOptions enumerate;
    bool use_enumeration = false;
    std::string out_path;
};

int cmd_orbits(const OrbitsArgs& args) {
    auto [group, n] = load_group(args.group);
    std::vector<Orbit> orbits;
    Stage stage("orbits");
    if (args.use_enumeration) {
        orbits = enumerate_orbit_reps(group, args.enumerate);
    } else {
        auto seeds = load_seeds(args.reps_path, n);
        for (const auto& seed : seeds) orbits.push_back(compute_orbit(group, seed));
    }
    std::uint64_t total = 0;
    for (const auto& orbit : orbits) total += orbit.size;
    stage.done(std::to_string(orbits.size()) + " orbits, " + std::to_string(total) + " words");
    if (!args.out_path.empty()) {
        auto out = open_output(args.out_path);
        write_orbit_list(out, orbits);
    } else {
        write_orbit_list(std::cout, orbits);
    }
    return kExitSuccess;
}

// graph: orbit list (or seeds) -> DIMACS.
struct GraphArgs {
    GroupOptions group;
    std::string orbits_path;
    std::string reps_path;
    int d = 0;
    std::string out_path;
    int threads = 0;
};

int cmd_graph(const GraphArgs& args) {
    auto [group, n] = load_group(args.group);
    std::vector<Orbit> orbits;
    if (!args.orbits_path.empty()) {
        orbits = load_orbit_list(args.orbits_path);
        if (!orbits.empty() && orbits.front().rep.half_length() != n)
            throw FormatError(args.orbits_path + ": orbit length does not match 2n=" +
                              std::to_string(2 * n));
    } else {
        for (const auto& seed : load_seeds(args.reps_path, n))
            orbits.push_back(compute_orbit(group, seed));
    }
    Stage stage("graph");
    auto graph = build_graph(group, orbits, args.d, args.threads);
    stage.done(std::to_string(graph.nodes.size()) + " nodes, " +
               std::to_string(graph.edge_count()) + " edges at d=" + std::to_string(args.d));
    if (!args.out_path.empty()) {
        auto out = open_output(args.out_path);
        write_dimacs(out, graph);
    } else {
        write_dimacs(std::cout, graph);
    }
    return kExitSuccess;
}

// clique: DIMACS -> best clique (optionally written as a seeds file).
struct CliqueArgs {
    std::string in_path;
    SolverOptions solver;
    std::string out_path;
};

int cmd_clique(const CliqueArgs& args) {
    Stage read_stage("read");
    std::ifstream in(args.in_path);
    if (!in) throw FormatError(args.in_path + ": cannot open file");
    auto graph = read_dimacs(in, args.in_path);
    read_stage.done(std::to_string(graph.nodes.size()) + " nodes, " +
                    std::to_string(graph.edge_count()) + " edges");
    auto result = run_solver(graph, args.solver);

    std::cout << "weight=" << result.weight << "\n";
    std::cout << "optimal=" << (result.optimal ? 1 : 0) << "\n";
    std::cout << "members=";
    for (std::size_t i = 0; i < result.members.size(); ++i)
        std::cout << (i ? " " : "") << result.members[i] + 1;
    std::cout << "\n";
    for (int index : result.members) {
        const auto& label = graph.nodes[static_cast<std::size_t>(index)].label;
        if (!label.empty()) std::cout << "rep=" << label << "\n";
    }
    if (!args.out_path.empty()) {
        std::vector<Doubleword> reps;
        for (int index : result.members) {
            const auto& label = graph.nodes[static_cast<std::size_t>(index)].label;
            if (label.empty())
                throw FormatError(args.in_path + ": node " + std::to_string(index + 1) +
                                  " has no rep label; cannot write a seeds file");
            reps.push_back(Doubleword::parse(label));
        }
        auto out = open_output(args.out_path);
        write_seeds_file(out, reps);
    }
    return kExitSuccess;
}

// extend: code file -> parity-extended code file.
struct ExtendArgs {
    std::string in_path;
    std::string out_path;
    int threads = 0;
};

int cmd_extend(const ExtendArgs& args) {
    CodeFileData data = load_code_file(args.in_path);
    Stage verify_stage("verify");
    auto report = verify_full_pairwise(data.code, args.threads);
    verify_stage.done("mindist " + format_distance(report.min_distance));
    print_report(std::cout, report);

    Code base = data.code;
    base.claimed_min_distance = report.min_distance;
    Stage extend_stage("extend");
    Code extended = extend_parity(base);  // throws on even or infinite distance
    auto extended_report = verify_full_pairwise(extended, args.threads);
    extend_stage.done("length " + std::to_string(extended.length) + ", mindist " +
                      format_distance(extended_report.min_distance));
    if (extended_report.min_distance != report.min_distance + 1)
        throw std::logic_error("parity extension did not raise the distance by one");
    print_report(std::cout, extended_report, "extended_");
    if (!args.out_path.empty()) {
        auto out = open_output(args.out_path);
        write_code_file(out, extended, extended_report.min_distance);
    }
    return kExitSuccess;
}

// shorten: code file -> best-coordinate shortening, --times times.
struct ShortenArgs {
    std::string in_path;
    int times = 1;
    std::string out_path;
    int threads = 0;
};

int cmd_shorten(const ShortenArgs& args) {
    if (args.times < 1) throw FormatError("--times must be >= 1");
    CodeFileData data = load_code_file(args.in_path);
    Code code = data.code;
    for (int step = 0; step < args.times; ++step) {
        Stage stage("shorten");
        int coordinate = best_shortening_coordinate(code);
        code = shorten(code, coordinate);
        stage.done("step " + std::to_string(step + 1) + ": coordinate " +
                   std::to_string(coordinate) + ", " + std::to_string(code.size()) +
                   " words kept");
        std::cout << "step=" << step + 1 << " coordinate=" << coordinate
                  << " size=" << code.size() << "\n";
    }
    Stage verify_stage("verify");
    auto report = verify_full_pairwise(code, args.threads);
    verify_stage.done("mindist " + format_distance(report.min_distance));
    print_report(std::cout, report);
    if (!args.out_path.empty()) {
        auto out = open_output(args.out_path);
        write_code_file(out, code, report.min_distance);
    }
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"code construction from permutation-group orbits on doublewords"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand(
        "verify", "assemble a code from group+reps (or read a code file) and check claims");
    verify->add_option("--group", verify_args.group.path, "group file")->check(CLI::ExistingFile);
    verify->add_option("--n", verify_args.group.n, "codeword length n");
    verify->add_option("--reps", verify_args.reps_path, "orbit representatives file")
        ->check(CLI::ExistingFile);
    verify->add_option("--code", verify_args.code_path, "code file to re-verify")
        ->check(CLI::ExistingFile);
    verify->add_option("--size", verify_args.size_claim, "claimed code size");
    verify->add_option("--d", verify_args.d_claim, "claimed exact minimum distance");
    verify->add_flag("--extend", verify_args.extend, "also verify the parity extension");
    verify->add_option("--extended-d", verify_args.extended_d_claim,
                       "claimed exact minimum distance after extension");
    verify->add_option("--threads", verify_args.threads, "worker threads (default: all cores)");

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "full pipeline: orbits, graph, clique, verify");
    add_group_options(search, search_args.group);
    search->add_option("--reps", search_args.reps_path,
                       "seed file of orbit representatives (default: enumerate all orbits)")
        ->check(CLI::ExistingFile);
    search->add_option("--d", search_args.d, "target minimum distance")->required();
    search->add_option("--weight-min", search_args.enumerate.weight_min,
                       "minimum codeword weight of kept orbits");
    search->add_option("--weight-max", search_args.enumerate.weight_max,
                       "maximum codeword weight of kept orbits");
    search->add_option("--max-orbits", search_args.enumerate.max_orbits,
                       "stop enumerating after this many orbits");
    add_solver_options(search, search_args.solver);
    search->add_option("--out", search_args.out_path, "write the found code to this file");
    search->add_option("--threads", search_args.threads, "worker threads (default: all cores)");

    OrbitsArgs orbits_args;
    auto* orbits = app.add_subcommand("orbits", "compute orbits from seeds or enumerate them");
    add_group_options(orbits, orbits_args.group);
    orbits->add_option("--reps", orbits_args.reps_path, "seed file (one doubleword per line)")
        ->check(CLI::ExistingFile);
    orbits->add_flag("--enumerate", orbits_args.use_enumeration, "sweep all 2^n codewords");
    orbits->add_option("--weight-min", orbits_args.enumerate.weight_min, "enumeration filter");
    orbits->add_option("--weight-max", orbits_args.enumerate.weight_max, "enumeration filter");
    orbits->add_option("--max-orbits", orbits_args.enumerate.max_orbits, "enumeration cap");
    orbits->add_option("--out", orbits_args.out_path, "orbit list output (default: stdout)");

    GraphArgs graph_args;
    auto* graph = app.add_subcommand("graph", "build the compatibility graph as DIMACS");
    add_group_options(graph, graph_args.group);
    graph->add_option("--orbits", graph_args.orbits_path, "orbit list file")
        ->check(CLI::ExistingFile);
    graph->add_option("--reps", graph_args.reps_path, "seed file")->check(CLI::ExistingFile);
    graph->add_option("--d", graph_args.d, "target minimum distance")->required();
    graph->add_option("--out", graph_args.out_path, "DIMACS output (default: stdout)");
    graph->add_option("--threads", graph_args.threads, "worker threads (default: all cores)");

    CliqueArgs clique_args;
    auto* clique = app.add_subcommand("clique", "maximum-weight clique of a DIMACS graph");
    clique->add_option("--in", clique_args.in_path, "DIMACS graph file")
        ->required()
        ->check(CLI::ExistingFile);
    add_solver_options(clique, clique_args.solver);
    clique->add_option("--out", clique_args.out_path,
                       "write the chosen orbit representatives as a seeds file");

    ExtendArgs extend_args;
    auto* extend = app.add_subcommand("extend", "append an overall parity bit");
    extend->add_option("--in", extend_args.in_path, "code file")
        ->required()
        ->check(CLI::ExistingFile);
    extend->add_option("--out", extend_args.out_path, "extended code output");
    extend->add_option("--threads", extend_args.threads, "worker threads (default: all cores)");

    ShortenArgs shorten_args;
    auto* shorten = app.add_subcommand("shorten", "best-coordinate shortening");
    shorten->add_option("--in", shorten_args.in_path, "code file")
        ->required()
        ->check(CLI::ExistingFile);
    shorten->add_option("--times", shorten_args.times, "number of shortening steps (default 1)");
    shorten->add_option("--out", shorten_args.out_path, "shortened code output");
    shorten->add_option("--threads", shorten_args.threads, "worker threads (default: all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (verify->parsed()) {
            if (verify_args.code_path.empty() &&
                (verify_args.group.path.empty() || verify_args.reps_path.empty()))
                throw FormatError("verify needs either --code or both --group and --reps");
            return cmd_verify(verify_args);
        }
        if (search->parsed()) return cmd_search(search_args);
        if (orbits->parsed()) {
            if (!orbits_args.use_enumeration && orbits_args.reps_path.empty())
                throw FormatError("orbits needs --reps or --enumerate");
            return cmd_orbits(orbits_args);
        }
        if (graph->parsed()) {
            if (graph_args.orbits_path.empty() && graph_args.reps_path.empty())
                throw FormatError("graph needs --orbits or --reps");
            return cmd_graph(graph_args);
        }
        if (clique->parsed()) return cmd_clique(clique_args);
        if (extend->parsed()) return cmd_extend(extend_args);
        if (shorten->parsed()) return cmd_shorten(shorten_args);
    } catch (const ClaimMismatch& e) {
        std::cerr << "claim mismatch: " << e.what() << "\n";
        return kExitClaimMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitSuccess;
}
