#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eduvis/analytics.hpp"
#include "eduvis/corpus.hpp"
#include "eduvis/gateway.hpp"
#include "eduvis/generators.hpp"
#include "eduvis/harness.hpp"
#include "eduvis/judge.hpp"
#include "eduvis/pipeline.hpp"

namespace eduvis::app {

struct GatewaySettings {
    gateway::Mode mode = gateway::Mode::replay;
    fs::path cache_dir;
    std::map<std::string, gateway::ProviderProfile> providers;  // provider_id -> profile
    std::map<std::string, std::string> models;                  // model_id -> provider_id
};

struct SampleSettings {
    std::size_t per_group = 0;  // 0 disables sampling
    corpus::SampleGroup group = corpus::SampleGroup::subject_difficulty;
};

struct JudgeSettings {
    std::string model_id;
    judge::JudgeMode mode = judge::JudgeMode::combined;
    int retries = 3;
    double temperature = 0.0;
    bool include_reference_answer = false;
    fs::path rubric_path;  // empty = bundled default rubric
};

struct PipelineSettings {
    int retries = 3;
    double temperature = 0.2;
};

struct RunConfig {
    fs::path corpus_path;
    std::vector<corpus::SourceSpec> sources;  // when non-empty, built instead of corpus_path
    fs::path taxonomy_path;
    fs::path output_dir;
    std::uint64_t seed = 42;
    std::optional<std::size_t> expected_total;
    SampleSettings sample;
    GatewaySettings gateway;
    std::vector<generators::ProducerSpec> producers;
    JudgeSettings judge;
    PipelineSettings pipeline;
    harness::RenderJob render_job;
    fs::path human_scores_path;  // consumed by the agree stage
    int workers = 4;

    // Relative paths resolve against the config file's directory.
    static RunConfig load(const fs::path& path);
    static RunConfig from_json(const Json& doc, const fs::path& base_dir);
    Json to_json() const;  // resolved snapshot, recorded in the run manifest

    // Field-level diagnostics, ErrorKind::config.
    void validate() const;
};

enum class Stage { ingest, generate, render, judge, report, agree, all };
const char* stage_name(Stage stage);
Stage stage_from(const std::string& name);

struct RunOptions {
    std::string run_id;                    // empty = timestamp-derived
    std::vector<std::string> producers;    // empty = all configured
    std::size_t limit = 0;                 // 0 = whole corpus
    std::optional<std::uint64_t> seed;     // overrides config seed
    fs::path human_scores;                 // overrides config for agree
};

// Filesystem layout of one run under <output_dir>/<run_id>/.
struct RunPaths {
    fs::path root;

    fs::path manifest() const { return root / "manifest.json"; }
    fs::path corpus() const { return root / "corpus.jsonl"; }
    fs::path stats() const { return root / "stats.json"; }
    fs::path artifacts() const { return root / "artifacts"; }
    fs::path pipeline_records() const { return root / "pipeline"; }
    fs::path shots() const { return root / "shots"; }
    fs::path cards() const { return root / "cards.jsonl"; }
    fs::path reports() const { return root / "reports"; }
    fs::path transcript() const { return root / "transcript.jsonl"; }
    fs::path failures() const { return root / "failures"; }
    fs::path rejections() const { return root / "rejections.jsonl"; }
};

// Executes stages with per-problem failure isolation, resumable through the
// manifest: a completed stage with an unchanged input digest is a no-op.
class Runner {
public:
    Runner(RunConfig config, const RunOptions& options,
           std::shared_ptr<Clock> clock = system_clock());

    // Runs one stage (or all of ingest->generate->render->judge->report);
    // returns a process exit status.
    int run(Stage stage);

    const RunPaths& paths() const { return paths_; }
    const std::string& run_id() const { return run_id_; }
    gateway::Gateway& gw() { return *gateway_; }

private:
    bool stage_done(const std::string& stage, const std::string& digest) const;
    void mark_stage(const std::string& stage, const std::string& digest);
    void ensure_done(const std::string& stage) const;

    void stage_ingest();
    void stage_generate();
    void stage_render();
    void stage_judge();
    void stage_report();
    void stage_agree();

    gateway::ProviderProfile profile_for_model(const std::string& model_id) const;
    std::vector<corpus::ProblemItem> run_corpus() const;
    std::vector<generators::ProducerSpec> active_producers() const;
    void record_failure(const std::string& stage, const std::string& producer_id,
                        const std::string& problem_id, const Error& error);

    RunConfig config_;
    RunOptions options_;
    std::string run_id_;
    RunPaths paths_;
    std::shared_ptr<Clock> clock_;
    std::unique_ptr<gateway::Gateway> gateway_;
    Json manifest_;
};

// Bounded fan-out over items; every item runs exactly once, exceptions are
// funneled to on_error, iteration order of completions is unspecified.
void run_parallel(int workers, std::size_t item_count,
                  const std::function<void(std::size_t)>& work);

}  // namespace eduvis::app
