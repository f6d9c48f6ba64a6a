#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eduvis/corpus.hpp"
#include "eduvis/gateway.hpp"
#include "eduvis/generators.hpp"

namespace eduvis::pipeline {

// ---------------------------------------------------------------------------
// Structured records exchanged between agents

struct Subgoal {
    int id = 0;
    std::string statement;
    std::string expected_reasoning;
    std::vector<std::string> linked_principles;
};

struct InstructionalPlan {
    std::vector<Subgoal> subgoals;  // ids 1..n in order
    std::vector<std::string> misconceptions;

    Json to_json() const;
};

enum class ConceptCategory { concrete, representational, abstract_construct };
const char* concept_category_name(ConceptCategory c);

struct ConceptEntry {
    std::string label;
    ConceptCategory category = ConceptCategory::concrete;
    std::string summary;
};

struct ConceptMap {
    std::vector<ConceptEntry> entries;  // labels unique

    Json to_json() const;
};

enum class ProblemType {
    equation_solving,
    conceptual_reasoning,
    commonsense_application,
    graphical_interpretation
};
const char* problem_type_name(ProblemType t);

struct ReasoningStep {
    int id = 0;
    std::string text;
    std::optional<std::string> intermediate_result;
};

struct ReasoningTrace {
    ProblemType problem_type = ProblemType::equation_solving;
    std::string organization;  // governing equations / diagram notes
    std::vector<std::string> plan;
    std::vector<ReasoningStep> steps;
    std::vector<int> critical_points;  // step ids needing visual scaffolding

    Json to_json() const;
};

struct ReflectionPrompt {
    enum class AnchorKind { step, subgoal };
    AnchorKind anchor_kind = AnchorKind::step;
    int anchor_id = 0;
    std::string question;
    std::string expected_check;
};

struct ReflectionSet {
    std::vector<ReflectionPrompt> prompts;  // at least one, anchors resolve

    Json to_json() const;
};

enum class ComponentKind {
    number_line,
    bar_chart,
    function_graph,
    schematic,
    graphic_organizer,
    sketch_diagram,
    data_table,
    flow_diagram
};
const char* component_kind_name(ComponentKind k);
ComponentKind component_kind_from(const std::string& name);  // throws validation

enum class ControlKind { button, slider, tab };
const char* control_kind_name(ControlKind k);

struct VisualControl {
    std::string control_id;
    ControlKind control_kind = ControlKind::button;
    std::string bound_parameter;  // must be named in the component's data.parameters
};

struct VisualComponent {
    std::string component_id;
    ComponentKind kind = ComponentKind::bar_chart;
    Json data = Json::object();
    std::string caption;
    int step_ref = 0;
    std::vector<VisualControl> controls;
};

struct VisualSpec {
    std::vector<VisualComponent> components;

    Json to_json() const;
};

// Fixed anchor ids tie the page regions to the five scored dimensions.
const std::map<std::string, std::string>& section_anchor_map();

struct LearningPage {
    std::string document;  // one self-contained page
    std::map<std::string, std::string> section_map;  // region -> anchor id
    std::vector<std::string> control_manifest;
};

// ---------------------------------------------------------------------------
// Record parsing + validation. Parsers are tolerant about extra fields;
// validators return every violation so repair prompts can cite them all.

InstructionalPlan plan_from_json(const Json& doc);
ConceptMap concept_map_from_json(const Json& doc);
ReasoningTrace trace_from_json(const Json& doc);
ReflectionSet reflections_from_json(const Json& doc);
VisualSpec visuals_from_json(const Json& doc);

std::vector<std::string> check_plan(const InstructionalPlan& plan);
std::vector<std::string> check_concept_map(const ConceptMap& cmap);
std::vector<std::string> check_trace(const ReasoningTrace& trace);
std::vector<std::string> check_reflections(const ReflectionSet& reflections,
                                           const ReasoningTrace& trace,
                                           const InstructionalPlan& plan);
std::vector<std::string> check_visuals(const VisualSpec& visuals, const ReasoningTrace& trace);
std::vector<std::string> check_learning_page(const std::string& document,
                                             const VisualSpec& visuals);

// ---------------------------------------------------------------------------
// Component compilation (built-in templates; no model involved)

std::string compile_component(const VisualComponent& component);
std::string compile_components(const VisualSpec& visuals);
std::string interaction_runtime_script();

// ---------------------------------------------------------------------------
// Stage execution

class StageFailure : public Error {
public:
    StageFailure(std::string stage, const std::string& message,
                 std::vector<std::string> transcript_refs)
        : Error(ErrorKind::stage, "stage " + stage + ": " + message),
          stage_(std::move(stage)), transcript_refs_(std::move(transcript_refs)) {}

    const std::string& stage_name() const { return stage_; }
    const std::vector<std::string>& transcript_refs() const { return transcript_refs_; }

private:
    std::string stage_;
    std::vector<std::string> transcript_refs_;
};

struct PipelineConfig {
    std::string producer_id = "eduvis-agent";
    std::string model_id;
    int retries = 3;  // schema-repair attempts per stage
    double temperature = 0.2;
    int max_output = 8192;
    gateway::ProviderProfile profile;
    gateway::Mode mode = gateway::Mode::replay;
    fs::path persist_dir;  // stage records land here when non-empty
};

InstructionalPlan plan_task(const corpus::ProblemItem& problem, const PipelineConfig& config,
                            gateway::Gateway& gw);
ConceptMap map_concepts(const corpus::ProblemItem& problem, const InstructionalPlan& plan,
                        const PipelineConfig& config, gateway::Gateway& gw);
ReasoningTrace decompose_reasoning(const corpus::ProblemItem& problem,
                                   const InstructionalPlan& plan, const ConceptMap& cmap,
                                   const PipelineConfig& config, gateway::Gateway& gw);
ReflectionSet review_metacognition(const ReasoningTrace& trace, const InstructionalPlan& plan,
                                   const PipelineConfig& config, gateway::Gateway& gw);
VisualSpec design_visuals(const InstructionalPlan& plan, const ConceptMap& cmap,
                          const ReasoningTrace& trace, const PipelineConfig& config,
                          gateway::Gateway& gw);
LearningPage synthesize_page(const InstructionalPlan& plan, const ConceptMap& cmap,
                             const ReasoningTrace& trace, const ReflectionSet& reflections,
                             const VisualSpec& visuals, const corpus::ProblemItem& problem,
                             const PipelineConfig& config, gateway::Gateway& gw,
                             std::string* transcript_ref = nullptr);

// Runs the six stages in order, persisting each intermediate record; the
// returned artifact's payload is the finished page document.
generators::GenerationArtifact run_pipeline(const corpus::ProblemItem& problem,
                                            const PipelineConfig& config, gateway::Gateway& gw);

}  // namespace eduvis::pipeline
