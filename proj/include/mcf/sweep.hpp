#pragma once

#include "mcf/lattice.hpp"
#include "mcf/mcf_steps.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mcf {

struct SweepConfig {
    Integer n = 100;
    std::vector<Algorithm> algorithms = table_algorithms();
    std::uint64_t seed = 0;
    Integer min_entry = 1;
    unsigned jobs = 1;
};

enum class RecordStatus { Ok, Undefined };

struct SweepRecord {
    IntVector triplet;
    Algorithm algorithm{Rule::Brun};
    std::optional<Rational> discrepancy;
    std::size_t word_length = 0;
    std::size_t steps = 0;
    RecordStatus status = RecordStatus::Ok;
    /// Why the record is Undefined; empty for Ok records.
    std::string reason;
};

struct StatSummary {
    Algorithm algorithm{Rule::Brun};
    double min = 0.0;
    double mean = 0.0;
    double max = 0.0;
    /// Population standard deviation.
    double std = 0.0;
    std::size_t count = 0;
    std::size_t undefined_count = 0;
    /// Ok records with discrepancy <= tijdeman_bound(3).
    std::size_t within_bound = 0;

    [[nodiscard]] double fraction_within_bound() const {
        return count == 0 ? 0.0 : static_cast<double>(within_bound) / static_cast<double>(count);
    }
};

struct SweepResult {
    SweepConfig config;
    /// Algorithm-major: all triplets of algorithms[0], then algorithms[1], ...
    std::vector<SweepRecord> records;
    std::vector<StatSummary> summaries;

    /// The records of one algorithm, in triplet order.
    [[nodiscard]] std::vector<SweepRecord> records_for(const Algorithm& algo) const;
};

/// Discrepancy bound 1 - 1/(2d - 2) of the chairman assignment construction.
Rational tijdeman_bound(Integer d);

/// All (a1, a2, a3) with ai >= min_entry and a1 + a2 + a3 = n, in
/// lexicographic order. Throws McfError when n < 3 * min_entry.
std::vector<IntVector> enumerate_triplets(Integer n, Integer min_entry = 1);

/// Generates the word of one triplet and measures its discrepancy against
/// triplet / n. Expansion failures become Undefined records.
SweepRecord run_record(const IntVector& triplet, const Algorithm& algo, std::uint64_t seed);

/// Statistics over the Ok records.
StatSummary summarize(const Algorithm& algo, const std::vector<SweepRecord>& records);

/// Runs every algorithm on every triplet; deterministic for a fixed config
/// regardless of `jobs`.
SweepResult run_sweep(const SweepConfig& cfg);

/// Barycentric layout with (n,0,0) at (0,0), (0,n,0) at (1,0) and (0,0,n)
/// at (1/2, sqrt(3)/2).
std::pair<double, double> ternary_project(const IntVector& a, Integer n);

/// "{prefix}_sum{n}_{slug}.dat"
std::string dat_file_name(const std::string& prefix, Integer n, const Algorithm& algo);

/// Header "xproj yproj stat", one row per Ok record, shortest round-trip
/// decimals, LF line endings.
void emit_dat(const std::vector<SweepRecord>& records, Integer n, const std::filesystem::path& path);

/// CSV "algorithm,min,mean,max,std" at 4 significant digits.
void emit_table(const std::vector<StatSummary>& summaries, const std::filesystem::path& path);

/// One JSON object per line: triplet, algorithm, discrepancy (fraction and
/// decimal), word length, status.
void emit_records_jsonl(const std::vector<SweepRecord>& records, const std::filesystem::path& path);

/// Human readable table including undefined counts and the share of
/// triplets at or below the 3/4 bound.
std::string render_summary(const std::vector<StatSummary>& summaries);

/// Shortest decimal that round-trips to `value`.
std::string shortest_decimal(double value);

}  // namespace mcf
