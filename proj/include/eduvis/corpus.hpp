#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eduvis/jsonio.hpp"

namespace eduvis::corpus {

enum class Subject { math, physics, chemistry };
enum class Difficulty { easy, medium, hard };

const char* subject_name(Subject s);
const char* difficulty_name(Difficulty d);
Subject subject_from(const std::string& name);        // throws validation on unknown
Difficulty difficulty_from(const std::string& name);  // throws validation on unknown

// Canonical report ordering: math/physics/chemistry, easy/medium/hard.
const std::vector<Subject>& all_subjects();
const std::vector<Difficulty>& all_difficulties();

struct Provenance {
    std::string dataset;
    std::string original_id;
};

struct ProblemItem {
    std::string id;
    Subject subject = Subject::math;
    std::string subdomain;
    Difficulty difficulty = Difficulty::easy;
    std::string statement;
    std::vector<std::string> assets;  // relative paths, never inline bytes
    std::optional<std::string> reference_answer;
    Provenance source;
    Json extra = Json::object();  // unknown fields, preserved on round-trip

    Json to_json() const;
    static ProblemItem from_json(const Json& record);  // throws validation
};

bool operator==(const ProblemItem& a, const ProblemItem& b);

using Taxonomy = std::map<Subject, std::set<std::string>>;

Taxonomy load_taxonomy(const fs::path& path);
Taxonomy taxonomy_from_json(const Json& doc);

struct SourceSpec {
    std::string adapter_id;  // "jsonl" or "tsv"
    fs::path input_path;
    std::map<std::string, std::string> field_map;  // source field -> item field
    std::map<std::string, std::string> constant_assignments;
};

struct Rejection {
    std::size_t line;  // 1-based line in the source file
    std::string reason;
};

struct IngestResult {
    std::vector<ProblemItem> items;
    std::vector<Rejection> rejections;
};

// Maps raw source records into the unified format. Record-level problems are
// collected as rejections; the call fails only when the file is unreadable,
// the adapter is unknown, or every record was rejected.
IngestResult ingest(const SourceSpec& source);

bool adapter_registered(const std::string& adapter_id);

struct CorpusStats {
    std::size_t total = 0;
    std::map<std::pair<Subject, Difficulty>, std::size_t> per_cell;
    std::map<std::string, std::size_t> subdomain_histogram;

    Json to_json() const;
};

// Duplicate ids or out-of-taxonomy subdomains throw ErrorKind::validation
// with every offender listed.
CorpusStats validate(const std::vector<ProblemItem>& items, const Taxonomy& taxonomy);

enum class SampleGroup { subject_difficulty, subject };

// Deterministic stratified sampling: a seeded permutation inside each group,
// first per_group survivors kept, output in original corpus order.
std::vector<ProblemItem> sample(const std::vector<ProblemItem>& items, std::size_t per_group,
                                std::uint64_t seed,
                                SampleGroup group = SampleGroup::subject_difficulty);

// Unified on-disk corpus: one JSON record per line, unknown fields preserved.
std::vector<ProblemItem> load_corpus(const fs::path& path);
void save_corpus(const fs::path& path, const std::vector<ProblemItem>& items);

}  // namespace eduvis::corpus
