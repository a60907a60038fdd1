#include "mcf/cli.hpp"

#include "mcf/metrics.hpp"
#include "mcf/sweep.hpp"
#include "mcf/wordgen.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace mcf {

namespace {

std::string render_freq(const FreqVector& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += to_string(f[i]);
    }
    return out + ")";
}

std::vector<Algorithm> parse_algorithm_list(const std::string& text) {
    if (text == "all") {
        return table_algorithms();
    }
    std::vector<Algorithm> algos;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        algos.push_back(parse_algorithm(item));
    }
    if (algos.empty()) {
        throw McfError("no algorithms given");
    }
    return algos;
}

void print_trace(const ExpansionTrace& trace, const Algorithm& algo, std::ostream& out) {
    out << "input " << to_string(trace.input) << '\n';
    out << "algorithm " << algo.slug() << '\n';
    const auto subs = trace_substitutions(trace);
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const auto& s = trace.steps[k];
        out << "step " << (k + 1) << ' ' << rule_name(s.rule) << " matrix " << to_string(s.matrix) << " successor "
            << to_string(s.successor) << " substitution " << subs[k].to_string() << '\n';
    }
    out << "steps " << trace.steps.size() << '\n';
    out << "terminal " << to_string(trace.terminal) << '\n';
    if (trace.completed()) {
        out << "status completed\n";
        out << "gcd " << gcd_of(trace.input) << '\n';
        out << "terminal_letter " << trace.terminal_letter->index << '\n';
    } else {
        out << "status stopped-early\n";
    }
}

struct ExpandArgs {
    std::string vector;
    std::string algo = "fusion-ar-poincare";
    std::uint64_t seed = 0;
};

int cmd_expand(const ExpandArgs& args, std::ostream& out) {
    const IntVector v = parse_vector(args.vector);
    const Algorithm algo = parse_algorithm(args.algo);
    const ExpansionTrace trace = expand(v, algo, args.seed);
    print_trace(trace, algo, out);
    return trace.completed() ? kExitOk : kExitStoppedEarly;
}

int cmd_word(const ExpandArgs& args, bool show_trace, std::ostream& out, std::ostream& err) {
    const IntVector v = parse_vector(args.vector);
    const Algorithm algo = parse_algorithm(args.algo);
    GeneratedWord gen;
    try {
        gen = generate_word(v, algo, args.seed);
    } catch (const ExpansionIncomplete& e) {
        err << "error: " << e.what() << '\n';
        return kExitStoppedEarly;
    }
    if (show_trace) {
        print_trace(gen.trace, algo, out);
    }
    const FreqVector f = normalize(v);
    out << "word " << to_string(gen.word) << '\n';
    out << "length " << gen.word.size() << '\n';
    out << "parikh " << to_string(parikh(gen.word, v.size())) << '\n';
    out << "gcd " << gen.gcd << '\n';
    const Rational disc = discrepancy(gen.word, f);
    out << "discrepancy " << to_string(disc) << " (" << format_significant(to_double(disc)) << ")\n";
    out << "balance " << balance(gen.word) << '\n';
    return kExitOk;
}

struct MetricsArgs {
    std::string word;
    std::string freq;
    bool literal_index = false;
};

int cmd_metrics(const MetricsArgs& args, std::ostream& out) {
    const Word w = parse_word(args.word);
    FreqVector f;
    if (!args.freq.empty()) {
        f = normalize(parse_vector(args.freq));
    } else {
        f = empirical_frequency(w);
    }
    const auto convention = args.literal_index ? PrefixConvention::LiteralIndex : PrefixConvention::Length;
    const Rational disc = discrepancy(w, f, convention);
    const MetricReport report = measure(w, f);
    out << "length " << w.size() << '\n';
    out << "frequency " << render_freq(f) << '\n';
    out << "empirical_frequency " << render_freq(report.empirical_freq) << '\n';
    out << "discrepancy " << to_string(disc) << " (" << format_significant(to_double(disc)) << ")\n";
    out << "balance " << report.balance << '\n';
    out << "complexity";
    for (Integer p : factor_complexity(w, w.size())) {
        out << ' ' << p;
    }
    out << '\n';
    out << "max_complexity_ratio " << to_string(report.max_complexity_ratio) << '\n';
    return kExitOk;
}

struct SweepArgs {
    Integer n = 100;
    std::string algos = "all";
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    std::string prefix = "discrepancy";
    Integer min_entry = 1;
    unsigned jobs = 1;
    bool records = false;
};

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
    SweepConfig cfg;
    cfg.n = args.n;
    cfg.algorithms = parse_algorithm_list(args.algos);
    cfg.seed = args.seed;
    cfg.min_entry = args.min_entry;
    cfg.jobs = args.jobs;
    const SweepResult result = run_sweep(cfg);

    const std::filesystem::path dir(args.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw McfError("cannot create '" + dir.string() + "': " + ec.message());
    }
    for (const auto& algo : cfg.algorithms) {
        emit_dat(result.records_for(algo), cfg.n, dir / dat_file_name(args.prefix, cfg.n, algo));
    }
    const std::string stem = args.prefix + "_sum" + std::to_string(cfg.n);
    emit_table(result.summaries, dir / (stem + "_table.csv"));
    if (args.records) {
        emit_records_jsonl(result.records, dir / (stem + "_records.jsonl"));
    }

    nlohmann::ordered_json summary;
    summary["n"] = cfg.n;
    summary["seed"] = cfg.seed;
    summary["min_entry"] = cfg.min_entry;
    summary["triplets"] = enumerate_triplets(cfg.n, cfg.min_entry).size();
    summary["tijdeman_bound"] = to_string(tijdeman_bound(3));
    for (const auto& s : result.summaries) {
        nlohmann::ordered_json row;
        row["algorithm"] = s.algorithm.slug();
        row["name"] = s.algorithm.display_name();
        row["min"] = s.min;
        row["mean"] = s.mean;
        row["max"] = s.max;
        row["std"] = s.std;
        row["count"] = s.count;
        row["undefined_count"] = s.undefined_count;
        row["within_bound"] = s.within_bound;
        row["fraction_within_bound"] = s.fraction_within_bound();
        summary["algorithms"].push_back(row);
    }
    const auto summary_path = dir / (stem + "_summary.json");
    std::ofstream summary_file(summary_path, std::ios::binary | std::ios::trunc);
    summary_file << summary.dump(2) << '\n';
    if (!summary_file) {
        throw McfError("write to '" + summary_path.string() + "' failed");
    }

    out << "N " << cfg.n << ", " << enumerate_triplets(cfg.n, cfg.min_entry).size() << " triplets, bound "
        << to_string(tijdeman_bound(3)) << '\n';
    out << render_summary(result.summaries);
    return kExitOk;
}

int cmd_project(const std::string& vector, std::ostream& out) {
    const IntVector a = parse_vector(vector);
    if (a.size() != 3) {
        throw McfError("project expects a triplet");
    }
    const auto [x, y] = ternary_project(a, a.sum());
    out << shortest_decimal(x) << ' ' << shortest_decimal(y) << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Words with prescribed letter frequencies from multidimensional continued fractions", "mcfwords"};
    app.require_subcommand(1);

    ExpandArgs expand_args;
    auto* expand_cmd = app.add_subcommand("expand", "Print the continued fraction expansion of a vector");
    expand_cmd->add_option("vector", expand_args.vector, "Integer vector a,b,c")->required();
    expand_cmd->add_option("--algo", expand_args.algo, "Algorithm slug");
    expand_cmd->add_option("--seed", expand_args.seed, "Seed for random reduction");

    ExpandArgs word_args;
    bool word_trace = false;
    auto* word_cmd = app.add_subcommand("word", "Generate the word of a vector and measure it");
    word_cmd->add_option("vector", word_args.vector, "Integer vector a,b,c")->required();
    word_cmd->add_option("--algo", word_args.algo, "Algorithm slug");
    word_cmd->add_option("--seed", word_args.seed, "Seed for random reduction");
    word_cmd->add_flag("--trace", word_trace, "Also print the expansion");

    MetricsArgs metrics_args;
    auto* metrics_cmd = app.add_subcommand("metrics", "Discrepancy, balance and complexity of a word");
    metrics_cmd->add_option("word", metrics_args.word, "Digit string such as 1213121")->required();
    metrics_cmd->add_option("--freq", metrics_args.freq, "Target frequencies as integer weights a,b,c");
    metrics_cmd->add_flag("--literal-index", metrics_args.literal_index,
                          "Pair prefix u_0..u_k with f_i*k instead of f_i*(k+1)");

    SweepArgs sweep_args;
    auto* sweep_cmd = app.add_subcommand("sweep", "Discrepancy statistics over all triplets summing to N");
    sweep_cmd->add_option("--n", sweep_args.n, "Common denominator N");
    sweep_cmd->add_option("--algos", sweep_args.algos, "Comma separated slugs, or 'all'");
    sweep_cmd->add_option("--seed", sweep_args.seed, "Seed for random reduction");
    sweep_cmd->add_option("--out-dir", sweep_args.out_dir, "Output directory");
    sweep_cmd->add_option("--prefix", sweep_args.prefix, "Output file prefix");
    sweep_cmd->add_option("--min-entry", sweep_args.min_entry, "Smallest entry of a triplet");
    sweep_cmd->add_option("--jobs", sweep_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--records", sweep_args.records, "Also write a JSON-lines record dump");

    std::string project_vector;
    auto* project_cmd = app.add_subcommand("project", "Ternary plot coordinates of a triplet");
    project_cmd->add_option("vector", project_vector, "Integer triplet a,b,c")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*expand_cmd) {
            return cmd_expand(expand_args, out);
        }
        if (*word_cmd) {
            return cmd_word(word_args, word_trace, out, err);
        }
        if (*metrics_cmd) {
            return cmd_metrics(metrics_args, out);
        }
        if (*sweep_cmd) {
            return cmd_sweep(sweep_args, out);
        }
        if (*project_cmd) {
            return cmd_project(project_vector, out);
        }
    } catch (const McfError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace mcf
