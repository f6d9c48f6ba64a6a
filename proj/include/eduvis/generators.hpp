#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eduvis/corpus.hpp"
#include "eduvis/gateway.hpp"

namespace eduvis::generators {

enum class ArtifactKind { image, svg, html };
const char* artifact_kind_name(ArtifactKind kind);
ArtifactKind artifact_kind_from(const std::string& name);

struct GenerationArtifact {
    std::string problem_id;
    std::string producer_id;
    ArtifactKind kind = ArtifactKind::html;
    std::string payload;  // document text for svg/html, raw bytes for image
    std::optional<std::string> transcript_ref;  // request digest in the gateway transcript
    std::string created_at;
};

// kind=svg/html payloads must be single well-formed documents; kind=image
// payloads must be non-empty. Throws ErrorKind::validation.
void check_artifact(const GenerationArtifact& artifact);

enum class Strategy { direct_prompt, agent_pipeline, file_import };
const char* strategy_name(Strategy s);
Strategy strategy_from(const std::string& name);

struct ProducerSpec {
    std::string producer_id;
    Strategy strategy = Strategy::direct_prompt;
    std::string model_id;          // required for direct_prompt / agent_pipeline
    ArtifactKind target_kind = ArtifactKind::html;
    std::string prompt_template;   // optional override of the default template
    fs::path import_dir;           // file_import: holds {problem_id}.png etc.

    void check() const;  // throws ErrorKind::config
};

// Extracts the longest well-formed document of the given kind from model
// output: fenced code blocks, the bare text, and embedded markup spans are
// all candidates. Returns the document exactly as it appeared (an
// already-bare document comes back unchanged). ambiguous is set when more
// than one well-formed candidate was found.
std::optional<std::string> extract_document(const std::string& text, ArtifactKind kind,
                                            bool* ambiguous = nullptr);

struct DirectPromptConfig {
    gateway::ProviderProfile profile;
    gateway::Mode mode = gateway::Mode::live;
    double temperature = 0.2;
    int max_output = 8192;
};

// Single-model baseline: prompt once, extract a document, retry with a
// corrective message when none is extractable. All attempts are recorded in
// the thrown generation error.
GenerationArtifact generate_direct(const corpus::ProblemItem& problem, const ProducerSpec& spec,
                                   int retries, gateway::Gateway& gw,
                                   const DirectPromptConfig& config);

// Imports pre-generated raster images verbatim, one artifact per path.
std::vector<GenerationArtifact> import_files(const corpus::ProblemItem& problem,
                                             const std::string& producer_id,
                                             const std::vector<fs::path>& paths);

const char* artifact_extension(ArtifactKind kind);

// artifacts/{producer_id}/{problem_id}.{html|svg|png} plus a sidecar
// metadata record; returns the payload path.
fs::path persist_artifact(const fs::path& artifacts_root, const GenerationArtifact& artifact);
GenerationArtifact load_artifact(const fs::path& artifacts_root, const std::string& producer_id,
                                 const std::string& problem_id);

std::string default_prompt_template(ArtifactKind kind);

}  // namespace eduvis::generators
