// mdim: construct, verify and analyze resolving sets of K(n1,n2,n3).
//
// Exit codes: 0 success / resolving / conclusive, 1 not resolving or
// inconclusive, 2 invalid input, 3 internal inconsistency.

#include "mdim/mdim.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>

#ifndef MDIM_VERSION
#define MDIM_VERSION "0.0.0"
#endif

namespace {

using mdim::Json;

enum Exit : int { Ok = 0, Negative = 1, BadInput = 2, Internal = 3 };

/// What a run touched, for the optional manifest.
struct Run {
    std::string command;
    Json parameters = Json::object();
    Json inputs = Json::array();
    Json outputs = Json::array();
    std::optional<std::uint64_t> seed;
};

/// "a,b,c" taken verbatim; no reordering.
mdim::Params parse_n(const std::string& text)
{
    std::array<int, 3> n{};
    std::size_t pos = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const std::size_t end = i < 2 ? text.find(',', pos) : text.size();
        if (end == std::string::npos)
            throw mdim::InputError("--n must be three comma-separated integers, got '" + text + "'");
        const char* first = text.data() + pos;
        const char* last = text.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, n[i]);
        if (ec != std::errc{} || ptr != last)
            throw mdim::InputError("--n must be three comma-separated integers, got '" + text + "'");
        pos = end + 1;
    }
    return mdim::Params::make(n[0], n[1], n[2]);
}

std::string read_input(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw mdim::InputError("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw mdim::InputError("cannot write '" + path + "'");
}

mdim::LandmarkSet load_set(Run& run, const std::string& path)
{
    run.inputs.push_back(path);
    return mdim::parse_landmark_set(read_input(path));
}

void record_output(Run& run, const std::string& path)
{
    run.outputs.push_back(path.empty() ? "-" : path);
}

std::uint64_t budget_from_env()
{
    const char* env = std::getenv("METRIC_DIM_BUDGET");
    if (env == nullptr || *env == '\0')
        return mdim::default_search_budget;
    std::uint64_t v = 0;
    const std::string s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0)
        throw mdim::InputError("METRIC_DIM_BUDGET must be a positive integer, got '" + s + "'");
    return v;
}

struct ConstructArgs {
    std::string n;
    bool plus_one = false;
    std::string trace;
    std::string out;
};

int cmd_construct(Run& run, const ConstructArgs& a, bool trace_requested)
{
    const auto p = parse_n(a.n);
    run.parameters = Json{{"n", a.n}, {"plus_one", a.plus_one}};
    const auto built = mdim::construct_middle(p);
    const auto set = a.plus_one ? mdim::extend_triple_loop(built.landmarks) : built.landmarks;
    write_output(a.out, mdim::dump(mdim::to_json(set)));
    record_output(run, a.out);
    if (trace_requested) {
        const auto text = mdim::dump(mdim::to_json(built.trace));
        if (a.trace.empty()) {
            std::cerr << text;
        } else {
            write_output(a.trace, text);
            record_output(run, a.trace);
        }
    }
    return Ok;
}

struct VerifyArgs {
    std::string landmarks;
    std::string method = "both";
    std::string out;
};

int cmd_verify(Run& run, const VerifyArgs& a)
{
    run.parameters = Json{{"method", a.method}};
    const auto w = load_set(run, a.landmarks);
    std::vector<mdim::VerifyResult> results;
    if (a.method != "distance")
        results.push_back(mdim::is_resolving_footprints(w));
    if (a.method != "footprint")
        results.push_back(mdim::is_resolving_distances(w));
    if (results.size() == 2 &&
        (results[0].resolving != results[1].resolving || results[0].witness != results[1].witness)) {
        std::cerr << "error: footprint and distance verifiers disagree\n";
        return Internal;
    }
    const auto& verdict = results.front();
    Json j;
    j["n"] = mdim::to_json(w.params());
    j["size"] = w.size();
    j["resolving"] = verdict.resolving;
    j["witness"] = verdict.witness ? Json::array({mdim::to_json(verdict.witness->first),
                                                  mdim::to_json(verdict.witness->second)})
                                   : Json(nullptr);
    Json methods = Json::array();
    for (const auto& r : results)
        methods.push_back(mdim::to_json(r));
    j["methods"] = std::move(methods);
    j["domination"] = mdim::to_json(mdim::domination_report(w));
    write_output(a.out, mdim::dump(j));
    record_output(run, a.out);
    if (!verdict.resolving) {
        std::cerr << "not resolving: " << mdim::to_string(verdict.witness->first) << " and "
                  << mdim::to_string(verdict.witness->second) << " are not separated\n";
        return Negative;
    }
    return Ok;
}

int cmd_detect(Run& run, const std::string& landmarks, const std::string& out)
{
    const auto w = load_set(run, landmarks);
    if (w.empty())
        throw mdim::InputError("landmark set is empty");
    write_output(out, mdim::dump(mdim::forbidden_report(w)));
    record_output(run, out);
    return Ok;
}

int cmd_classify(Run& run, const std::string& n)
{
    run.parameters = Json{{"n", n}};
    std::cout << mdim::to_string(mdim::classify_cone(parse_n(n))) << "\n";
    return Ok;
}

struct SearchArgs {
    std::string n;
    std::string mode = "exhaustive";
    int max_size = 0;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;
    std::string out;
};

int cmd_search(Run& run, const SearchArgs& a, unsigned threads, bool budget_given)
{
    const auto p = parse_n(a.n);
    run.parameters = Json{{"n", a.n}, {"mode", a.mode}, {"max_size", a.max_size}};
    mdim::SearchResult r;
    std::optional<std::uint64_t> seed;
    if (a.mode == "greedy") {
        seed = a.seed;
        run.seed = a.seed;
        r.best = mdim::greedy_resolving(p, a.seed);
        std::cerr << "greedy: resolving set of size " << r.size() << " for K" << p.to_string() << " (seed "
                  << a.seed << ")\n";
    } else {
        mdim::SearchOptions opts;
        opts.max_size = a.max_size;
        opts.budget = budget_given ? a.budget : budget_from_env();
        opts.threads = threads;
        run.parameters["budget"] = opts.budget;
        r = mdim::exhaustive_min_resolving(p, opts);
        if (r.conclusive())
            std::cerr << "exhaustive: minimum resolving set size " << r.size() << " for K" << p.to_string()
                      << "\n";
        else
            std::cerr << "exhaustive: inconclusive for K" << p.to_string()
                      << (r.budget_exceeded ? " (budget exceeded)" : " (no resolving set up to --max-size)")
                      << "\n";
    }
    if (r.best && !mdim::is_resolving_distances(*r.best).resolving) {
        std::cerr << "error: search returned a set that does not resolve\n";
        return Internal;
    }
    write_output(a.out, mdim::dump(mdim::search_result_json(p, a.mode, r, seed)));
    record_output(run, a.out);
    return r.conclusive() ? Ok : Negative;
}

int cmd_export_dot(Run& run, const std::string& landmarks, const std::string& out)
{
    const auto w = load_set(run, landmarks);
    if (w.empty())
        throw mdim::InputError("landmark set is empty");
    write_output(out, mdim::to_dot(w));
    record_output(run, out);
    return Ok;
}

void write_manifest(const std::string& path, const Run& run, int code, double seconds)
{
    Json m;
    m["command"] = run.command;
    m["parameters"] = run.parameters;
    m["inputs"] = run.inputs;
    m["outputs"] = run.outputs;
    m["seed"] = run.seed ? Json(*run.seed) : Json(nullptr);
    m["version"] = MDIM_VERSION;
    m["duration_seconds"] = seconds;
    m["exit_code"] = code;
    write_output(path, mdim::dump(m));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Resolving sets of direct products of three complete graphs K(n1,n2,n3)"};
    app.set_version_flag("--version", MDIM_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    std::string manifest;
    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    app.add_option("--manifest", manifest, "Write a JSON run manifest to this path");
    app.add_option("--threads", threads, "Worker threads for exhaustive search")
        ->check(CLI::Range(1U, 1024U))
        ->capture_default_str();

    ConstructArgs construct_args;
    auto* construct = app.add_subcommand("construct", "Middle-cone resolving set of K(n)");
    construct->add_option("--n", construct_args.n, "Parameters n1,n2,n3 (taken verbatim)")->required();
    construct->add_flag("--plus-one", construct_args.plus_one,
                        "Add the triple-loop vertex: a resolving set of K(n+1)");
    auto* trace_opt = construct->add_option("--trace", construct_args.trace,
                                            "Write the construction trace (to stderr without a path)")
                          ->expected(0, 1);
    construct->add_option("--out", construct_args.out, "Output path (default stdout)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check whether a landmark set resolves K(n)");
    verify->add_option("landmarks", verify_args.landmarks, "Landmark-set JSON ('-' for stdin)")->required();
    verify->add_option("--method", verify_args.method, "footprint, distance or both")
        ->check(CLI::IsMember({"footprint", "distance", "both"}))
        ->capture_default_str();
    verify->add_option("--out", verify_args.out, "Output path (default stdout)");

    std::string detect_in;
    std::string detect_out;
    auto* detect = app.add_subcommand("detect", "Report forbidden configurations in the landmark graph");
    detect->add_option("landmarks", detect_in, "Landmark-set JSON ('-' for stdin)")->required();
    detect->add_option("--out", detect_out, "Output path (default stdout)");

    std::string classify_n;
    auto* classify = app.add_subcommand("classify", "Print the cone of n: Lower, Middle or Upper");
    classify->add_option("--n", classify_n, "Parameters n1,n2,n3")->required();

    SearchArgs search_args;
    auto* search = app.add_subcommand("search", "Exhaustive minimum or greedy resolving set");
    search->add_option("--n", search_args.n, "Parameters n1,n2,n3")->required();
    search->add_option("--mode", search_args.mode, "exhaustive or greedy")
        ->check(CLI::IsMember({"exhaustive", "greedy"}))
        ->capture_default_str();
    search->add_option("--max-size", search_args.max_size, "Largest size tried (exhaustive; 0 = all)")
        ->check(CLI::NonNegativeNumber);
    search->add_option("--seed", search_args.seed, "Seed (greedy)")->capture_default_str();
    auto* budget_opt = search->add_option("--budget", search_args.budget,
                                          "Subset verifications allowed (default METRIC_DIM_BUDGET or 1e8)")
                           ->check(CLI::PositiveNumber);
    search->add_option("--out", search_args.out, "Output path (default stdout)");

    std::string dot_in;
    std::string dot_out;
    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of the landmark graph");
    dot->add_option("landmarks", dot_in, "Landmark-set JSON ('-' for stdin)")->required();
    dot->add_option("--out", dot_out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? Ok : BadInput;
    }

    Run run;
    const auto start = std::chrono::steady_clock::now();
    int code = Ok;
    try {
        if (construct->parsed()) {
            run.command = "construct";
            code = cmd_construct(run, construct_args, trace_opt->count() > 0);
        } else if (verify->parsed()) {
            run.command = "verify";
            code = cmd_verify(run, verify_args);
        } else if (detect->parsed()) {
            run.command = "detect";
            code = cmd_detect(run, detect_in, detect_out);
        } else if (classify->parsed()) {
            run.command = "classify";
            code = cmd_classify(run, classify_n);
        } else if (search->parsed()) {
            run.command = "search";
            code = cmd_search(run, search_args, threads, budget_opt->count() > 0);
        } else if (dot->parsed()) {
            run.command = "export-dot";
            code = cmd_export_dot(run, dot_in, dot_out);
        }
    } catch (const std::invalid_argument& e) {
        // ParamError and InputError
        std::cerr << "error: " << e.what() << "\n";
        code = BadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        code = Internal;
    }

    if (!manifest.empty()) {
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        try {
            write_manifest(manifest, run, code, elapsed.count());
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return code == Ok ? BadInput : code;
        }
    }
    return code;
}
