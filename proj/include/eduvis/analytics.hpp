#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eduvis/corpus.hpp"
#include "eduvis/judge.hpp"

namespace eduvis::analytics {

struct CellSummary {
    double mean_normalized = 0.0;
    std::size_t count = 0;
};

struct ProducerReport {
    std::map<std::pair<corpus::Subject, corpus::Difficulty>, CellSummary> cells;
    double overall_avg = 0.0;  // item-weighted over all scored cards
    std::size_t scored = 0;
    std::array<double, 5> dimension_means{};
    std::size_t failures = 0;
};

struct BenchmarkReport {
    std::map<std::string, ProducerReport> producers;  // keyed by producer_id
};

// Cell lookup comes from the corpus; a card naming an unknown problem is an
// aggregation error. Failed cards count as failures and never enter means.
BenchmarkReport aggregate(const std::vector<judge::ScoreCard>& cards,
                          const std::vector<corpus::ProblemItem>& corpus_items);

struct AgreementResult {
    double cosine = 0.0;
    double mse = 0.0;
    std::size_t n = 0;          // paired score count
    std::string scale = "raw_0_5";
};

// cosine = dot/(|a||b|), mse = mean squared elementwise difference. Vectors
// must be equal-length, non-empty, and not all-zero (cosine undefined);
// mean_squared_error alone has no all-zero restriction.
AgreementResult agreement(const std::vector<double>& judge_scores,
                          const std::vector<double>& human_scores);
double mean_squared_error(const std::vector<double>& a, const std::vector<double>& b);

// producer -> elementwise mean of the five dimension scores over its scored
// cards; producers with no scored cards are omitted.
std::map<std::string, std::array<double, 5>> radar(const std::vector<judge::ScoreCard>& cards);

enum class ReportFormat { table_text, delimited, structured };

// Deterministic bytes: producers alphabetical, subjects math/physics/
// chemistry, difficulties easy/medium/hard; empty cells render as "-".
std::string render_report(const BenchmarkReport& report, ReportFormat format);
std::string render_radar(const std::map<std::string, std::array<double, 5>>& radar_data);

// Writes leaderboard.txt / leaderboard.tsv / summary.json / radar.tsv under
// the output directory; returns the written paths.
std::vector<fs::path> emit(const BenchmarkReport& report,
                           const std::map<std::string, std::array<double, 5>>& radar_data,
                           const fs::path& out_dir);

// Per-subject agreement table in the benchmark's layout (chemistry, math,
// physics columns plus an Average column of the per-subject means).
std::string render_agreement_table(const std::map<corpus::Subject, AgreementResult>& by_subject);

}  // namespace eduvis::analytics
