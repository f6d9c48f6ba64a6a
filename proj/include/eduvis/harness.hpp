#pragma once

#include <string>
#include <vector>

#include "eduvis/generators.hpp"

namespace eduvis::harness {

struct Viewport {
    int width = 1280;
    int height = 800;
};

struct SettlePolicy {
    int max_wait_ms = 3000;
    int quiescence_ms = 500;
};

struct Limits {
    std::size_t max_states = 20;
    std::size_t max_depth = 5;
    int per_action_timeout_ms = 2000;
};

struct RenderJob {
    Viewport viewport;
    SettlePolicy settle;
    Limits limits;
    std::vector<double> slider_stops = {0.0, 0.5, 1.0};
    bool allow_external = false;  // explore refuses non-self-contained pages otherwise

    void check() const;  // throws ErrorKind::argument
};

struct Shot {
    std::string state_id;  // "s000", "s001", ... in capture order
    std::vector<std::string> trigger_path;  // actions from the initial state
    std::string image;  // png bytes (imported images pass through unchanged)
    int width = 0;
    int height = 0;
    std::string state_hash;
};

struct ExplorationEntry {
    std::string from_state;
    std::string action;
    std::string result_hash;
    bool duplicate = false;
    bool skipped = false;  // action abandoned (timeout/unresolvable), exploration continued
};

struct ScreenshotSet {
    std::vector<Shot> shots;
    std::vector<ExplorationEntry> exploration_log;
};

// svg/image artifacts: exactly one shot. SVG renders at intrinsic size fitted
// within the viewport; images pass through byte-identical with header-sniffed
// dimensions. Malformed svg or unsupported image encodings throw
// ErrorKind::render.
ScreenshotSet rasterize(const generators::GenerationArtifact& artifact, const RenderJob& job);

// html artifacts: breadth-first control exploration with canonical-hash
// dedup; shot[0] is the initial state; capture stops at limits.max_states,
// expansion at limits.max_depth.
ScreenshotSet explore(const generators::GenerationArtifact& artifact, const RenderJob& job);

// Replays a recorded trigger path against a fresh load and returns the
// resulting state hash (the determinism check behind every non-initial shot).
std::string replay_path(const generators::GenerationArtifact& artifact,
                        const std::vector<std::string>& trigger_path);

// shots/{producer_id}/{problem_id}/{index:03}.png plus explore.json
void persist_shots(const fs::path& shots_root, const ScreenshotSet& set,
                   const std::string& producer_id, const std::string& problem_id,
                   const RenderJob& job);
ScreenshotSet load_shots(const fs::path& shots_root, const std::string& producer_id,
                         const std::string& problem_id);

}  // namespace eduvis::harness
