#include <bideal/basic_ideals.hpp>
#include <bideal/bpaths.hpp>
#include <bideal/count.hpp>
#include <bideal/diagram.hpp>
#include <bideal/root_poset.hpp>
#include <bideal/threads.hpp>
#include <bideal/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using bideal::BPath;
using bideal::Count;
using bideal::PathClass;
using bideal::Root;
using json = nlohmann::ordered_json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int rank_from_word(const std::string& word, const char* flag) {
    if (word.empty() || word.size() % 2 != 0)
        throw usage_error(std::string(flag) + ": word length must be even and positive");
    if (word.size() > 64) throw usage_error(std::string(flag) + ": rank above 32 not supported");
    return static_cast<int>(word.size()) / 2;
}

BPath parse_path_arg(const std::string& word, int n, const char* flag) {
    std::string message;
    auto path = BPath::parse(word, n, &message);
    if (!path) throw usage_error(std::string(flag) + ": " + message);
    return *path;
}

json root_pairs(const std::vector<Root>& roots) {
    json out = json::array();
    for (const Root& a : roots) out.push_back(json::array({a.r, a.s}));
    return out;
}

void emit_json(const json& value) { std::cout << value.dump() << "\n"; }

std::string format_seconds(double seconds) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3f", seconds);
    return buffer;
}

// ------------------------------------------------------------------ ideal --

struct IdealArgs {
    std::string path_word;
    std::string q_word;
    bool admissible_q = false;
};

int run_ideal(const IdealArgs& args) {
    const int n = rank_from_word(args.path_word, "--path");
    const BPath p = parse_path_arg(args.path_word, n, "--path");
    if (args.admissible_q && !args.q_word.empty())
        throw usage_error("--q and --admissible-q are mutually exclusive");

    json out;
    out["schema"] = 1;
    out["n"] = n;
    out["path"] = p.str();

    if (args.admissible_q) {
        bideal::QAdmissibility info = bideal::admissible_q_info(p);
        out["class"] = json::array({info.p_class.first_f, info.p_class.second_f});
        if (info.first_f_min) out["q_first_f_min"] = *info.first_f_min;
        if (info.second_f_min) out["q_second_f_min"] = *info.second_f_min;
        if (info.max_f_count) out["q_max_f_count"] = *info.max_f_count;
        out["q_minimal"] = info.minimal_q.str();
    } else if (!args.q_word.empty()) {
        const BPath q = parse_path_arg(args.q_word, n, "--q");
        out["q"] = q.str();
        out["admissible"] = bideal::is_admissible({p, q});
        out["lower"] = root_pairs(bideal::path_to_coideal(p));
        const auto mask = bideal::decode_pair_mask(n, p, q);
        std::vector<Root> upper;
        for (const Root& a : bideal::positive_roots(n))
            if (mask.test(static_cast<size_t>(bideal::upper_index(n, a)))) upper.push_back(a);
        out["upper"] = root_pairs(upper);
    } else {
        out["roots"] = root_pairs(bideal::path_to_coideal(p));
    }
    emit_json(out);
    return 0;
}

// ------------------------------------------------------------------ paths --

struct PathsArgs {
    int n = 0;
    std::string class_spec;
    bool list = false;
    std::string format = "text";
};

std::pair<int, std::optional<int>> parse_class_spec(const std::string& spec, int n) {
    int i = 0, j = 0;
    char extra = 0;
    if (std::sscanf(spec.c_str(), "%d,%d%c", &i, &j, &extra) == 2) {
        if (i < 2 || j <= i || j > 2 * n + 1) throw usage_error("--class: pair out of range");
        return {i, j};
    }
    if (std::sscanf(spec.c_str(), "%d%c", &i, &extra) == 1) {
        if (i < 1 || i > 2 * n) throw usage_error("--class: index out of range");
        return {i, std::nullopt};
    }
    throw usage_error("--class: expected i or i,j");
}

int run_paths(const PathsArgs& args) {
    std::optional<std::pair<int, std::optional<int>>> cls;
    if (!args.class_spec.empty()) cls = parse_class_spec(args.class_spec, args.n);

    json out;
    out["schema"] = 1;
    out["n"] = args.n;
    if (cls) {
        json c = json::array({cls->first});
        if (cls->second) c.push_back(*cls->second);
        out["class"] = c;
    }

    if (args.list) {
        std::vector<std::string> words;
        bideal::for_each_bpath(args.n, [&](const BPath& p) {
            if (cls) {
                PathClass c = bideal::classify(p);
                if (c.first_f != cls->first) return;
                if (cls->second && c.second_f != *cls->second) return;
            }
            words.push_back(p.str());
        });
        if (args.format == "json") {
            out["paths"] = words;
            emit_json(out);
        } else {
            for (const auto& word : words) std::cout << word << "\n";
        }
        return 0;
    }

    Count count;
    if (!cls)
        count = bideal::bpath_count(args.n);
    else if (cls->second)
        count = bideal::count_class_pair(args.n, cls->first, *cls->second);
    else
        count = bideal::count_class_first(args.n, cls->first);
    if (args.format == "json") {
        out["count"] = count.str();
        emit_json(out);
    } else {
        std::cout << count.str() << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ basic --

struct BasicArgs {
    int n = 0;
    std::string method = "formula";
    int threads = 0;
    long long cap = 100000;
    bool timing = false;
    std::string format = "text";
};

struct MethodRun {
    std::string method;
    std::optional<Count> count;
    double elapsed = 0.0;
};

MethodRun run_method(const std::string& method, const BasicArgs& args, bool tolerate_cap) {
    MethodRun result{method, std::nullopt, 0.0};
    const auto start = std::chrono::steady_clock::now();
    if (method == "formula") {
        result.count = bideal::count_basic_formula(args.n);
    } else if (method == "cases") {
        result.count = bideal::case_sums(args.n).total();
    } else if (method == "pairs") {
        result.count = bideal::count_basic_pairs(args.n);
    } else {
        bideal::BruteforceOptions options;
        options.threads = bideal::resolve_thread_count(args.threads);
        options.cap = Count(args.cap);
        try {
            result.count = bideal::count_basic_bruteforce(args.n, options);
        } catch (const bideal::resource_limit_error&) {
            if (!tolerate_cap) throw;
        }
    }
    const auto stop = std::chrono::steady_clock::now();
    result.elapsed = std::chrono::duration<double>(stop - start).count();
    return result;
}

int run_basic(const BasicArgs& args) {
    std::vector<std::string> methods;
    if (args.method == "all")
        methods = {"formula", "cases", "pairs", "bruteforce"};
    else
        methods = {args.method};

    std::vector<MethodRun> runs;
    for (const auto& method : methods) runs.push_back(run_method(method, args, args.method == "all"));

    bool agree = true;
    for (const auto& run : runs)
        if (run.count && *run.count != *runs.front().count) agree = false;

    if (args.format == "json") {
        json out;
        out["schema"] = 1;
        out["n"] = args.n;
        json results = json::array();
        for (const auto& run : runs) {
            json entry;
            entry["method"] = run.method;
            if (run.count)
                entry["count"] = run.count->str();
            else
                entry["skipped"] = "cap-exceeded";
            if (args.timing) entry["elapsed_s"] = run.elapsed;
            results.push_back(entry);
        }
        out["results"] = results;
        if (runs.size() > 1) out["agreement"] = agree;
        emit_json(out);
    } else {
        for (const auto& run : runs) {
            std::cout << "method=" << run.method << " n=" << args.n;
            if (run.count)
                std::cout << " count=" << run.count->str();
            else
                std::cout << " skipped=cap-exceeded";
            if (args.timing) std::cout << " elapsed_s=" << format_seconds(run.elapsed);
            std::cout << "\n";
        }
        if (runs.size() > 1) std::cout << "agreement=" << (agree ? "yes" : "no") << "\n";
    }
    return agree ? 0 : 1;
}

// --------------------------------------------------------------- sequence --

struct SequenceArgs {
    int from = 2;
    int to = 12;
    std::string format = "csv";
};

int run_sequence(const SequenceArgs& args) {
    if (args.from > args.to) throw usage_error("--from must not exceed --to");
    if (args.format == "json") {
        json out;
        out["schema"] = 1;
        out["from"] = args.from;
        out["to"] = args.to;
        json terms = json::array();
        for (int n = args.from; n <= args.to; ++n) {
            json term;
            term["n"] = n;
            term["count"] = bideal::count_basic_formula(n).str();
            if (n >= 4) term["recurrence_residual"] = bideal::recurrence_residual(n).str();
            terms.push_back(term);
        }
        out["terms"] = terms;
        emit_json(out);
        return 0;
    }
    if (args.format == "csv") std::cout << "n,count\n";
    for (int n = args.from; n <= args.to; ++n) {
        const char sep = args.format == "csv" ? ',' : ' ';
        std::cout << n << sep << bideal::count_basic_formula(n).str() << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- verify --

struct VerifyArgs {
    int n_max = 0;
    int threads = 0;
    std::uint64_t random_pairs = 100000;
    std::uint64_t seed = 20240817;
};

int run_verify(const VerifyArgs& args) {
    bideal::verify::Options options;
    options.n_max = args.n_max;
    options.threads = bideal::resolve_thread_count(args.threads);
    options.random_pairs = args.random_pairs;
    options.seed = args.seed;
    int failed = 0, passed = 0;
    for (const auto& check : bideal::verify::run_all(options)) {
        if (check.pass) {
            ++passed;
            std::cout << "[PASS] " << check.name << "\n";
        } else {
            ++failed;
            std::cout << "[FAIL] " << check.name << ": " << check.detail << "\n";
        }
    }
    std::cout << "summary: " << passed << " passed, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- diagram --

struct DiagramArgs {
    int n = 0;
    std::string p_word;
    std::string q_word;
    std::string format = "svg";
    std::string output;
};

int run_diagram(const DiagramArgs& args) {
    if (args.p_word.empty() != args.q_word.empty())
        throw usage_error("--p and --q must be given together");
    std::optional<BPath> p, q;
    if (!args.p_word.empty()) {
        p = parse_path_arg(args.p_word, args.n, "--p");
        q = parse_path_arg(args.q_word, args.n, "--q");
    }
    const std::string content = args.format == "tikz" ? bideal::render_tikz(args.n, p, q)
                                                      : bideal::render_svg(args.n, p, q);
    if (args.output.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream file(args.output);
    if (!file) throw std::runtime_error("cannot open " + args.output);
    file << content;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Type B root posets, B-paths, and basic ideal counts"};
    app.require_subcommand(1);

    IdealArgs ideal_args;
    auto* ideal = app.add_subcommand("ideal", "decode a path (or pair) into its coideal");
    ideal->add_option("--path", ideal_args.path_word, "lower path p over {r,f}")->required();
    ideal->add_option("--q", ideal_args.q_word, "upper path q of the same length");
    ideal->add_flag("--admissible-q", ideal_args.admissible_q,
                    "describe which q complete p admissibly");

    PathsArgs paths_args;
    auto* paths = app.add_subcommand("paths", "count or list B-paths");
    paths->add_option("--n", paths_args.n, "rank")->required()->check(CLI::Range(1, 32));
    paths->add_option("--class", paths_args.class_spec, "restrict to class i or i,j");
    paths->add_flag("--list", paths_args.list, "list words instead of counting");
    paths->add_option("--format", paths_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    BasicArgs basic_args;
    auto* basic = app.add_subcommand("basic", "count basic ideals");
    basic->add_option("--n", basic_args.n, "rank")->required()->check(CLI::Range(2, 32));
    basic->add_option("--method", basic_args.method, "formula, cases, pairs, bruteforce, or all")
        ->check(CLI::IsMember({"formula", "cases", "pairs", "bruteforce", "all"}));
    basic->add_option("--threads", basic_args.threads, "worker threads (0 = auto)");
    basic->add_option("--bruteforce-cap", basic_args.cap,
                      "refuse enumeration when the expected count exceeds this");
    basic->add_flag("--timing", basic_args.timing, "append elapsed seconds");
    basic->add_option("--format", basic_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    SequenceArgs sequence_args;
    auto* sequence = app.add_subcommand("sequence", "print the count sequence");
    sequence->add_option("--from", sequence_args.from, "first rank")->check(CLI::Range(2, 32));
    sequence->add_option("--to", sequence_args.to, "last rank")->check(CLI::Range(2, 32));
    sequence->add_option("--format", sequence_args.format, "csv, bfile, or json")
        ->check(CLI::IsMember({"csv", "bfile", "json"}));

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run the cross-check suite");
    verify->add_option("--n-max", verify_args.n_max, "cap the rank of every check (0 = full)");
    verify->add_option("--threads", verify_args.threads, "worker threads (0 = auto)");
    verify->add_option("--random-pairs", verify_args.random_pairs,
                       "sample size for the randomized criterion check");
    verify->add_option("--seed", verify_args.seed, "seed for the randomized checks");

    DiagramArgs diagram_args;
    auto* diagram = app.add_subcommand("diagram", "render the doubled board");
    diagram->add_option("--n", diagram_args.n, "rank")->required()->check(CLI::Range(2, 16));
    diagram->add_option("--p", diagram_args.p_word, "lower path p");
    diagram->add_option("--q", diagram_args.q_word, "upper path q");
    diagram->add_option("--format", diagram_args.format, "svg or tikz")
        ->check(CLI::IsMember({"svg", "tikz"}));
    diagram->add_option("-o,--output", diagram_args.output, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ideal->parsed()) return run_ideal(ideal_args);
        if (paths->parsed()) return run_paths(paths_args);
        if (basic->parsed()) return run_basic(basic_args);
        if (sequence->parsed()) return run_sequence(sequence_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (diagram->parsed()) return run_diagram(diagram_args);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
