#include "mcf/sweep.hpp"

#include "mcf/metrics.hpp"
#include "mcf/wordgen.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

namespace mcf {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw McfError("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw McfError("write to '" + path.string() + "' failed");
    }
}

}  // namespace

std::vector<SweepRecord> SweepResult::records_for(const Algorithm& algo) const {
    std::vector<SweepRecord> out;
    std::copy_if(records.begin(), records.end(), std::back_inserter(out),
                 [&](const SweepRecord& r) { return r.algorithm == algo; });
    return out;
}

Rational tijdeman_bound(Integer d) {
    if (d < 2) {
        throw McfError("tijdeman_bound: d must be >= 2");
    }
    return Rational(1) - Rational(1, 2 * d - 2);
}

std::vector<IntVector> enumerate_triplets(Integer n, Integer min_entry) {
    if (min_entry < 0 || n < 3 * min_entry || n < 1) {
        throw McfError("no triplets with sum " + std::to_string(n) + " and entries >= " + std::to_string(min_entry));
    }
    std::vector<IntVector> out;
    for (Integer a1 = min_entry; a1 <= n - 2 * min_entry; ++a1) {
        for (Integer a2 = min_entry; a2 <= n - a1 - min_entry; ++a2) {
            out.push_back(make_vector({a1, a2, n - a1 - a2}));
        }
    }
    return out;
}

SweepRecord run_record(const IntVector& triplet, const Algorithm& algo, std::uint64_t seed) {
    SweepRecord rec;
    rec.triplet = triplet;
    rec.algorithm = algo;
    try {
        const GeneratedWord gen = generate_word(triplet, algo, seed);
        rec.discrepancy = discrepancy(gen.word, normalize(triplet));
        rec.word_length = gen.word.size();
        rec.steps = gen.trace.steps.size();
    } catch (const ExpansionIncomplete& e) {
        rec.status = RecordStatus::Undefined;
        rec.reason = e.what();
    }
    return rec;
}

StatSummary summarize(const Algorithm& algo, const std::vector<SweepRecord>& records) {
    StatSummary s;
    s.algorithm = algo;
    const Rational bound = tijdeman_bound(3);
    double sum = 0.0;
    for (const auto& r : records) {
        if (r.status != RecordStatus::Ok) {
            ++s.undefined_count;
            continue;
        }
        const double x = to_double(*r.discrepancy);
        if (s.count == 0) {
            s.min = s.max = x;
        }
        s.min = std::min(s.min, x);
        s.max = std::max(s.max, x);
        sum += x;
        ++s.count;
        if (*r.discrepancy <= bound) {
            ++s.within_bound;
        }
    }
    if (s.count == 0) {
        return s;
    }
    s.mean = sum / static_cast<double>(s.count);
    double squares = 0.0;
    for (const auto& r : records) {
        if (r.status == RecordStatus::Ok) {
            const double dev = to_double(*r.discrepancy) - s.mean;
            squares += dev * dev;
        }
    }
    s.std = std::sqrt(squares / static_cast<double>(s.count));
    return s;
}

SweepResult run_sweep(const SweepConfig& cfg) {
    if (cfg.algorithms.empty()) {
        throw McfError("sweep: no algorithms selected");
    }
    const auto triplets = enumerate_triplets(cfg.n, cfg.min_entry);
    const std::size_t per_algo = triplets.size();
    const std::size_t total = per_algo * cfg.algorithms.size();

    SweepResult result;
    result.config = cfg;
    result.records.resize(total);

    // Each task owns one slot; the output order never depends on scheduling.
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < total; i += stride) {
            result.records[i] = run_record(triplets[i % per_algo], cfg.algorithms[i / per_algo], cfg.seed);
        }
    };
    const unsigned jobs = std::max(1u, cfg.jobs);
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned j = 0; j < jobs; ++j) {
            workers.emplace_back(work, j, jobs);
        }
    }

    for (std::size_t a = 0; a < cfg.algorithms.size(); ++a) {
        const auto first = result.records.begin() + static_cast<std::ptrdiff_t>(a * per_algo);
        const std::vector<SweepRecord> slice(first, first + static_cast<std::ptrdiff_t>(per_algo));
        result.summaries.push_back(summarize(cfg.algorithms[a], slice));
    }
    return result;
}

std::pair<double, double> ternary_project(const IntVector& a, Integer n) {
    if (a.size() != 3) {
        throw DimensionMismatch("ternary_project: expected a triplet");
    }
    const auto nd = static_cast<double>(n);
    const double x = (static_cast<double>(a[1]) + static_cast<double>(a[2]) / 2.0) / nd;
    const double y = std::sqrt(3.0) / 2.0 * static_cast<double>(a[2]) / nd;
    return {x, y};
}

std::string dat_file_name(const std::string& prefix, Integer n, const Algorithm& algo) {
    return prefix + "_sum" + std::to_string(n) + "_" + algo.slug() + ".dat";
}

std::string shortest_decimal(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) {
        throw McfError("cannot format number");
    }
    return std::string(buf, ptr);
}

void emit_dat(const std::vector<SweepRecord>& records, Integer n, const std::filesystem::path& path) {
    auto out = open_output(path);
    out << "xproj yproj stat\n";
    for (const auto& r : records) {
        if (r.status != RecordStatus::Ok) {
            continue;
        }
        const auto [x, y] = ternary_project(r.triplet, n);
        out << shortest_decimal(x) << ' ' << shortest_decimal(y) << ' ' << shortest_decimal(to_double(*r.discrepancy))
            << '\n';
    }
    finish_output(out, path);
}

void emit_table(const std::vector<StatSummary>& summaries, const std::filesystem::path& path) {
    auto out = open_output(path);
    out << "algorithm,min,mean,max,std\n";
    for (const auto& s : summaries) {
        out << s.algorithm.slug() << ',' << format_significant(s.min) << ',' << format_significant(s.mean) << ','
            << format_significant(s.max) << ',' << format_significant(s.std) << '\n';
    }
    finish_output(out, path);
}

void emit_records_jsonl(const std::vector<SweepRecord>& records, const std::filesystem::path& path) {
    auto out = open_output(path);
    for (const auto& r : records) {
        nlohmann::json j;
        j["triplet"] = std::vector<Integer>(r.triplet.data(), r.triplet.data() + r.triplet.size());
        j["algorithm"] = r.algorithm.slug();
        j["status"] = r.status == RecordStatus::Ok ? "ok" : "undefined";
        if (r.discrepancy) {
            j["discrepancy"] = to_string(*r.discrepancy);
            j["discrepancy_decimal"] = to_double(*r.discrepancy);
            j["word_length"] = r.word_length;
        } else {
            j["reason"] = r.reason;
        }
        out << j.dump() << '\n';
    }
    finish_output(out, path);
}

std::string render_summary(const std::vector<StatSummary>& summaries) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-48s %8s %8s %8s %8s %6s %6s %9s\n", "algorithm", "min", "mean", "max", "std",
                  "ok", "undef", "<=3/4");
    out << line;
    for (const auto& s : summaries) {
        std::snprintf(line, sizeof line, "%-48s %8s %8s %8s %8s %6zu %6zu %9s\n", s.algorithm.display_name().c_str(),
                      format_significant(s.min).c_str(), format_significant(s.mean).c_str(),
                      format_significant(s.max).c_str(), format_significant(s.std).c_str(), s.count,
                      s.undefined_count, format_significant(s.fraction_within_bound()).c_str());
        out << line;
    }
    return out.str();
}

}  // namespace mcf
