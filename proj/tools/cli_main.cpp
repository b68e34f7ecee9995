#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "largesets/barrier.hpp"
#include "largesets/coloring.hpp"
#include "largesets/forcing.hpp"
#include "largesets/gadgets.hpp"
#include "largesets/generators.hpp"
#include "largesets/ordinal.hpp"
#include "largesets/reductions.hpp"
#include "largesets/report.hpp"
#include "largesets/search.hpp"
#include "largesets/solution.hpp"

using namespace largesets;

namespace {

// exit codes: 0 ok/verified, 2 invalid input, 3 no witness, 4 verification failure
constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kNoWitness = 3;
constexpr int kVerifyFail = 4;

void emit(const Json& report, const std::string& format) {
    if (format == "json")
        std::cout << report.dump() << "\n";
    else
        std::cout << report.dump(2) << "\n";
}

EnumerationSchedule load_schedule(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open schedule file " + path);
    return EnumerationSchedule::load_jsonl(in);
}

Coloring load_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open coloring file " + path);
    return load_coloring_jsonl(in);
}

std::vector<int> default_sizes(int N) {
    std::vector<int> sizes;
    for (int m = 3; m <= std::min(6, N); ++m) sizes.push_back(m);
    return sizes;
}

int run_enumerate(int horizon, const std::string& format) {
    Json report = report_header("enumerate-large");
    report["horizon"] = horizon;
    Json sets = Json::array();
    for (const FinSet& s : enumerate_exactly_large(horizon)) sets.push_back(s.elements());
    report["count"] = sets.size();
    report["sets"] = std::move(sets);
    emit(report, format);
    return kOk;
}

int run_catalan(int upto, const std::string& format) {
    Json report = report_header("catalan");
    Json values = Json::array();
    for (int n = 0; n <= upto; ++n) values.push_back(catalan(n));
    report["values"] = std::move(values);
    emit(report, format);
    return kOk;
}

int run_check_barrier(const std::string& name, const std::optional<std::string>& file,
                      int horizon, const std::string& format) {
    std::optional<Barrier> barrier;
    if (file) {
        std::ifstream in(*file);
        if (!in) throw std::invalid_argument("cannot open barrier file " + *file);
        barrier = load_barrier_jsonl(in);
    } else if (name == "schreier") {
        barrier = schreier_barrier();
    } else if (name.rfind("tuples:", 0) == 0) {
        barrier = fixed_size_barrier(std::stoi(name.substr(7)));
    } else {
        throw std::invalid_argument("unknown barrier '" + name + "'");
    }
    const BarrierReport br = check_barrier_prefix(*barrier, horizon);
    Json report = report_header("check-barrier");
    report["barrier"] = barrier->name;
    report["horizon"] = horizon;
    Json viols = Json::array();
    for (const auto& [s, t] : br.subset_violations)
        viols.push_back(Json{{"s", s.elements()}, {"t", t.elements()}});
    report["subset_violations"] = std::move(viols);
    report["covered"] = br.covered;
    report["undetermined"] = br.undetermined;
    emit(report, format);
    return br.subset_violations.empty() ? kOk : kVerifyFail;
}

int run_search(const std::string& kind_text, long long color, long long max_color, int size,
               int horizon, const std::optional<std::string>& coloring_file,
               const std::optional<std::string>& gadget_name,
               const std::optional<std::string>& schedule_file, const std::string& format) {
    std::optional<Coloring> f;
    if (coloring_file) {
        f = load_coloring(*coloring_file);
    } else if (gadget_name) {
        if (*gadget_name == "cex_ts_all_finite") f = cex_ts_all_finite();
        else if (*gadget_name == "cex_rrt_all_finite") f = cex_rrt_all_finite(horizon);
        else if (*gadget_name == "pfs_unbounded_false") f = gadget_pfs_unbounded_false();
        else if (*gadget_name == "pfs_noncomputable_bound") {
            if (!schedule_file) throw std::invalid_argument("gadget needs --schedule");
            f = gadget_pfs_noncomputable_bound(load_schedule(*schedule_file));
        } else
            throw std::invalid_argument("unknown gadget '" + *gadget_name + "'");
    } else {
        throw std::invalid_argument("search needs --coloring or --gadget");
    }

    SolutionKind kind = SolutionKind::rainbow();
    if (kind_text == "homogeneous") kind = SolutionKind::homogeneous();
    else if (kind_text == "free") kind = SolutionKind::free_scalar();
    else if (kind_text == "free-set") kind = SolutionKind::free_set_valued();
    else if (kind_text == "thin-for") kind = SolutionKind::thin_for(color);
    else if (kind_text == "thin") kind = SolutionKind::thin(max_color);
    else if (kind_text == "rainbow") kind = SolutionKind::rainbow();
    else throw std::invalid_argument("unknown solution kind '" + kind_text + "'");

    const auto witness = find_solution(*f, kind, size, horizon);
    Json report = report_header("search");
    report["kind"] = kind.describe();
    report["size"] = size;
    report["horizon"] = horizon;
    if (witness) {
        report["witness"] = witness->elements();
        emit(report, format);
        return kOk;
    }
    report["witness"] = nullptr;
    emit(report, format);
    return kNoWitness;
}

int run_gadget(const std::string& name, const std::optional<std::string>& schedule_file,
               const std::vector<std::string>& level_files, int horizon, bool verify,
               const std::optional<std::string>& out_file, std::uint64_t seed, int arity,
               const std::string& format) {
    std::optional<EnumerationSchedule> sched;
    if (schedule_file) sched = load_schedule(*schedule_file);

    std::optional<Coloring> coloring;
    std::optional<Barrier> barrier;
    std::optional<GadgetVerifyReport> verdict;
    const std::vector<int> sizes = default_sizes(horizon);

    if (name == "cex_ts_all_finite") {
        coloring = cex_ts_all_finite();
        if (verify) verdict = verify_cex_ts(std::min(horizon, 10), 6);
    } else if (name == "cex_rrt_all_finite") {
        coloring = cex_rrt_all_finite(horizon);
        if (verify) verdict = verify_cex_rrt(std::min(horizon, 10));
    } else if (name == "ts_fincolors") {
        if (!sched) throw std::invalid_argument("ts_fincolors needs --schedule");
        coloring = gadget_ts_fincolors(*sched, arity);
        if (verify) verdict = verify_fincolors(*sched, arity, horizon);
    } else if (name == "ts_schreier") {
        std::vector<EnumerationSchedule> levels;
        for (const auto& file : level_files) levels.push_back(load_schedule(file));
        if (levels.empty() && sched) levels.push_back(*sched);
        if (levels.empty()) throw std::invalid_argument("ts_schreier needs --levels");
        const LevelFamily family(levels);
        coloring = gadget_ts_schreier(family);
        if (verify) verdict = verify_ts_schreier(family, horizon);
    } else if (name == "rrt_arith") {
        SplitMix64 rng(seed);
        const auto family = random_bounded_family(rng, horizon - 1, horizon);
        coloring = gadget_rrt_arith(family);
        if (verify) verdict = verify_rrt_arith(family, std::min(horizon, 10), sizes);
    } else if (name == "barrier_rrt_jump") {
        if (!sched) throw std::invalid_argument("barrier_rrt_jump needs --schedule");
        auto gadget = gadget_barrier_rrt_jump(*sched, horizon);
        coloring = gadget.coloring;
        barrier = gadget.barrier;
        if (verify) verdict = verify_barrier_rrt_jump(*sched, horizon, sizes);
    } else if (name == "barrier_pfs_jump") {
        if (!sched) throw std::invalid_argument("barrier_pfs_jump needs --schedule");
        auto gadget = gadget_barrier_pfs_jump(*sched, horizon);
        coloring = gadget.coloring;
        barrier = gadget.barrier;
        if (verify) verdict = verify_barrier_pfs_jump(*sched, horizon, sizes);
    } else if (name == "pfs_unbounded_false") {
        coloring = gadget_pfs_unbounded_false();
        if (verify) verdict = verify_pfs_unbounded(horizon);
    } else if (name == "pfs_noncomputable_bound") {
        if (!sched) throw std::invalid_argument("pfs_noncomputable_bound needs --schedule");
        coloring = gadget_pfs_noncomputable_bound(*sched);
        if (verify) verdict = verify_pfs_noncomputable(*sched, std::min(horizon, 16));
    } else {
        throw std::invalid_argument("unknown gadget '" + name + "'");
    }

    if (out_file && coloring) {
        std::ofstream out(*out_file);
        if (!out) throw std::invalid_argument("cannot open output file " + *out_file);
        save_coloring_jsonl(out, *coloring, horizon);
    }

    Json report = report_header("gadget");
    report["name"] = name;
    report["horizon"] = horizon;
    if (barrier) report["barrier"] = barrier->name;
    if (coloring && !out_file) {
        std::ostringstream table;
        save_coloring_jsonl(table, *coloring, horizon);
        report["table"] = table.str();
    }
    if (verdict) report["verification"] = verdict->to_json();
    emit(report, format);
    return (!verdict || verdict->ok()) ? kOk : kVerifyFail;
}

int run_transform(const std::string& reduction, const std::string& in_file,
                  const std::string& out_file, int horizon) {
    const Coloring f = load_coloring(in_file);
    std::optional<Coloring> g;
    if (reduction == "red_fs_from_rt") g = red_fs_from_rt(f, horizon);
    else if (reduction == "red_rrt_from_rt") g = red_rrt_from_rt(f, 2, horizon);
    else if (reduction == "red_rrt2_from_fs") g = red_rrt2_from_fs(f, horizon);
    else if (reduction == "red_ts_from_rrt_omegaplus1") g = red_ts_from_rrt_omegaplus1(f, horizon);
    else if (reduction == "red_rrt_dim_embed")
        g = red_rrt_dim_embed(f, 2, f.domain().tuple_arity(), horizon);
    else if (reduction == "red_progressive_from_rrt") g = red_progressive_from_rrt(f, 2, horizon);
    else if (reduction == "red_ts_cofinite") g = red_ts_cofinite(f, horizon);
    else
        throw std::invalid_argument("transform: unknown or non-table reduction '" + reduction +
                                    "'");
    std::ofstream out(out_file);
    if (!out) throw std::invalid_argument("cannot open output file " + out_file);
    save_coloring_jsonl(out, *g, horizon);
    return kOk;
}

int run_verify(const std::string& reduction, std::uint64_t seed, int horizon, int size,
               int trials, bool corrupt, const std::string& format) {
    const VerifyReport report = verify_reduction(reduction, seed, horizon, size, trials, corrupt);
    emit(report.to_json(), format);
    if (report.checks_failed > 0) return kVerifyFail;
    return kOk;
}

int run_forcing(const std::string& check, const std::string& params_file, long long max_space,
                std::optional<long long> sample, const std::string& format) {
    std::ifstream in(params_file);
    if (!in) throw std::invalid_argument("cannot open params file " + params_file);
    Json params = Json::parse(in);

    const int horizon = params.value("horizon", 12);
    const BoundFn b = BoundFn::parse(params.value("b", "const:1"));
    const FinSet sigma(params.value("sigma", std::vector<int>{}));
    const FinSet X(params.value("x", std::vector<int>{}));

    Json report = report_header("forcing");
    report["check"] = check;

    if (check == "question") {
        const BoundFn h = BoundFn::parse(params.value("h", "const:1"));
        const int k = params.value("k", 2);
        const Phi phi = Phi::parse(params.at("phi"));
        const ForcingAnswer answer = forcing_question_finite(
            h, b_plus_fn(b, h), sigma, X, phi, k, max_space, sample, params.value("seed", 0));
        report["phi"] = phi.describe();
        report["answer"] = answer.to_json();
        emit(report, format);
        if (answer.exceeded_budget) return kInvalid;
        return answer.value ? kOk : kNoWitness;
    }

    const Coloring f = load_coloring(params.at("f").get<std::string>());
    if (check == "condition") {
        const ConditionReport cond = check_condition(f, b, sigma, X, horizon);
        report["ok_a"] = cond.ok_a;
        report["ok_b"] = cond.ok_b;
        Json viols = Json::array();
        for (const auto& v : cond.violations)
            viols.push_back(Json{{"s", v.s.elements()}, {"clause", v.clause}});
        report["violations"] = std::move(viols);
        emit(report, format);
        return cond.ok() ? kOk : kVerifyFail;
    }
    if (check == "stabilize") {
        const int k = params.value("k", 2);
        const auto witness = compute_stabilization(k, X, f, b, horizon);
        report["k"] = k;
        report["valid"] = witness.valid;
        Json traces = Json::array();
        for (const auto& [key, trace] : witness.traces)
            traces.push_back(Json{{"t", key.first.elements()},
                                  {"n", key.second},
                                  {"trace", trace.elements()}});
        report["traces"] = std::move(traces);
        emit(report, format);
        return witness.valid ? kOk : kVerifyFail;
    }
    if (check == "preserve-b") {
        const int k = params.value("k", 2);
        const FinSet Y(params.value("y", std::vector<int>{}));
        const FinSet rho(params.value("rho", std::vector<int>{}));
        const auto result = verify_preserving_b(f, b, sigma, X, Y, k, rho, horizon);
        report["ok"] = result.ok;
        Json viols = Json::array();
        for (const auto& v : result.violations)
            viols.push_back(Json{{"s", v.s.elements()}, {"clause", v.clause}});
        report["violations"] = std::move(viols);
        emit(report, format);
        return result.ok ? kOk : kVerifyFail;
    }
    throw std::invalid_argument("forcing: unknown check '" + check + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite combinatorics of colorings of the Schreier barrier"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    int horizon = 10;
    std::uint64_t seed = 1;
    int workers = 0;
    int size = 3;
    std::string format = "json";
    app.add_option("--horizon", horizon, "universe bound N; sets live inside [0,N)");
    app.add_option("--seed", seed, "seed for every generated instance");
    app.add_option("--workers", workers, "worker threads (0 = library default)");
    app.add_option("--size", size, "solution size for search/verify");
    app.add_option("--format", format, "report format: json | pretty");

    auto* enumerate = app.add_subcommand("enumerate-large", "list exactly omega-large sets");

    auto* barrier_cmd = app.add_subcommand("check-barrier", "probe barrier axioms at a horizon");
    std::string barrier_name = "schreier";
    std::optional<std::string> barrier_file;
    barrier_cmd->add_option("--name", barrier_name, "schreier | tuples:n");
    barrier_cmd->add_option("--file", barrier_file, "barrier member table (JSON Lines)");

    auto* gadget_cmd = app.add_subcommand("gadget", "build a named gadget, optionally verify");
    std::string gadget_name;
    std::optional<std::string> schedule_file;
    std::vector<std::string> level_files;
    std::optional<std::string> out_file;
    bool gadget_verify = false;
    int gadget_arity = 3;
    gadget_cmd->add_option("--name", gadget_name)->required();
    gadget_cmd->add_option("--schedule", schedule_file, "enumeration schedule (JSON Lines)");
    gadget_cmd->add_option("--levels,--level-schedules", level_files,
                           "level schedules, one file per level")
        ->delimiter(',');
    gadget_cmd->add_option("--arity", gadget_arity, "tuple arity for ts_fincolors");
    gadget_cmd->add_option("--out", out_file, "write the coloring table here");
    gadget_cmd->add_flag("--verify", gadget_verify, "run the gadget's property verifier");

    auto* transform_cmd = app.add_subcommand("transform", "apply a reduction's forward map");
    std::string reduction_name, in_file, out_path;
    transform_cmd->add_option("--reduction", reduction_name)->required();
    transform_cmd->add_option("--in", in_file)->required();
    transform_cmd->add_option("--out", out_path)->required();

    auto* search_cmd = app.add_subcommand("search", "exhaustive solution search");
    std::string kind_text = "rainbow";
    long long color = 0, max_color = 0;
    std::optional<std::string> coloring_file, search_gadget, search_schedule;
    search_cmd->add_option("--kind", kind_text,
                           "homogeneous | free | free-set | thin | thin-for | rainbow");
    search_cmd->add_option("--color", color, "target color for thin-for");
    search_cmd->add_option("--max-color", max_color, "color universe bound for thin");
    search_cmd->add_option("--coloring", coloring_file, "coloring table (JSON Lines)");
    search_cmd->add_option("--gadget", search_gadget, "built-in gadget name");
    search_cmd->add_option("--schedule", search_schedule, "schedule for gadgets that need one");

    auto* verify_cmd = app.add_subcommand("verify", "reduction solution-mapping harness");
    std::string verify_reduction_name;
    int trials = 50;
    bool corrupt = false;
    verify_cmd->add_option("--reduction", verify_reduction_name)->required();
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_flag("--corrupt", corrupt, "deliberately break the forward map (self-test)");

    auto* forcing_cmd = app.add_subcommand("forcing", "condition / stabilization / question checks");
    std::string forcing_check = "condition";
    std::string params_file;
    long long max_space = 2'000'000;
    std::optional<long long> sample;
    forcing_cmd->add_option("--check", forcing_check, "condition | stabilize | preserve-b | question");
    forcing_cmd->add_option("--params", params_file, "JSON parameter file")->required();
    forcing_cmd->add_option("--max-space", max_space, "largest adversary space to enumerate");
    forcing_cmd->add_option("--sample", sample, "sample this many adversaries instead");

    auto* catalan_cmd = app.add_subcommand("catalan", "Catalan numbers");
    int upto = 5;
    catalan_cmd->add_option("--upto", upto);

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (workers > 0) omp_set_num_threads(workers);
#endif

    try {
        if (enumerate->parsed()) return run_enumerate(horizon, format);
        if (catalan_cmd->parsed()) return run_catalan(upto, format);
        if (barrier_cmd->parsed())
            return run_check_barrier(barrier_name, barrier_file, horizon, format);
        if (gadget_cmd->parsed())
            return run_gadget(gadget_name, schedule_file, level_files, horizon, gadget_verify,
                              out_file, seed, gadget_arity, format);
        if (transform_cmd->parsed())
            return run_transform(reduction_name, in_file, out_path, horizon);
        if (search_cmd->parsed())
            return run_search(kind_text, color, max_color, size, horizon, coloring_file,
                              search_gadget, search_schedule, format);
        if (verify_cmd->parsed())
            return run_verify(verify_reduction_name, seed, horizon, size, trials, corrupt, format);
        if (forcing_cmd->parsed())
            return run_forcing(forcing_check, params_file, max_space, sample, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kInvalid;
}
