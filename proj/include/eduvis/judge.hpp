#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eduvis/corpus.hpp"
#include "eduvis/gateway.hpp"
#include "eduvis/harness.hpp"

namespace eduvis::judge {

struct RubricDimension {
    int index = 0;  // 1..5
    std::string name;
    std::string description;
    std::array<std::string, 6> levels;  // indexed by score 0..5
};

// Fixed order: Context Visualization, Diagram Design, Text-Graphic
// Integration, Thought Guidance, Interactivity.
using Rubric = std::vector<RubricDimension>;

Rubric default_rubric();
Rubric rubric_from_json(const Json& doc);  // throws ErrorKind::rubric on any defect
Rubric load_rubric(const fs::path& path);
std::string rubric_checksum(const Rubric& rubric);

enum class JudgeMode { combined, per_dimension };
const char* judge_mode_name(JudgeMode mode);
JudgeMode judge_mode_from(const std::string& name);

struct JudgePrompt {
    int dimension_index = 0;  // 0 for the combined prompt, else 1..5
    std::string text;
};

// combined: one prompt carrying all five names+descriptions and the exact
// rating output-format instruction. per_dimension: five prompts, each naming
// a single category and its definition.
std::vector<JudgePrompt> build_prompt(const Rubric& rubric, const corpus::ProblemItem& problem,
                                      std::size_t shot_count, JudgeMode mode,
                                      bool include_reference_answer = false);

// The literal output-format shape the judge is instructed to emit.
std::string format_rating(const std::map<int, int>& scores);

// Locates the RATING object anywhere in the text (surrounding prose is
// fine; the last parseable occurrence wins) and returns key -> score.
// Missing required keys, non-integer values, or scores outside 0..5 throw
// ErrorKind::parse.
std::map<int, int> parse_rating(const std::string& text,
                                const std::set<int>& required_keys = {1, 2, 3, 4, 5});

struct ScoreCard {
    std::string problem_id;
    std::string producer_id;
    std::optional<std::array<int, 5>> scores;  // dimension order 1..5
    int raw_sum = 0;
    double normalized = 0.0;
    std::string judge_transcript_ref;
    struct Failure {
        std::string stage;
        std::string reason;
    };
    std::optional<Failure> failure;  // set exactly when scores are absent

    Json to_json() const;
    static ScoreCard from_json(const Json& doc);
};

// raw_sum and normalized (raw/25 x 100, i.e. exactly 4x) derived from the
// five scores; throws ErrorKind::validation on out-of-range scores.
ScoreCard make_scorecard(const std::string& problem_id, const std::string& producer_id,
                         const std::array<int, 5>& scores, std::string transcript_ref);
ScoreCard make_failure_card(const std::string& problem_id, const std::string& producer_id,
                            const std::string& stage, const std::string& reason);

struct JudgeConfig {
    std::string model_id;
    JudgeMode mode = JudgeMode::combined;
    int retries = 3;
    double temperature = 0.0;
    int max_output = 512;
    bool include_reference_answer = false;
    std::size_t max_images_per_request = 16;  // exceeding shots are truncated and noted
    gateway::ProviderProfile profile;
    gateway::Mode gateway_mode = gateway::Mode::replay;
};

// Sends every screenshot (exploration order) with the rubric prompt(s);
// parse failures are retried with a corrective turn up to config.retries,
// then recorded as a failure card. Transport errors propagate.
ScoreCard score(const harness::ScreenshotSet& shots, const corpus::ProblemItem& problem,
                const std::string& producer_id, const Rubric& rubric, const JudgeConfig& config,
                gateway::Gateway& gw);

}  // namespace eduvis::judge
