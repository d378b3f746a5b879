#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "histbias/embed.hpp"
#include "histbias/error.hpp"
#include "histbias/stability.hpp"

namespace histbias::pipeline {

inline constexpr const char* kToolVersion = "0.1.0";

/// A stage aborted; carries the stage name.
class StageError : public Error {
public:
    StageError(std::string stage, const std::string& cause)
        : Error("stage '" + stage + "' failed: " + cause), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

struct Inputs {
    std::filesystem::path documents;
    std::filesystem::path periods;
    std::optional<std::filesystem::path> ocr_rules;
    std::optional<std::filesystem::path> language_profiles;  ///< directory of <lang>.txt
    std::optional<std::filesystem::path> annotations;        ///< absent: heuristic annotator
    std::optional<std::filesystem::path> annotator_lexicon;  ///< directory, needed without annotations
    std::filesystem::path keywords;                          ///< directory
    std::filesystem::path person_lexicon;
    std::optional<std::filesystem::path> gold;
    std::optional<std::filesystem::path> lexicon_dir;
    std::optional<std::filesystem::path> misspellings;
    std::optional<std::filesystem::path> weat_tests;
    std::optional<std::filesystem::path> weat_sets;
};

struct PipelineConfig {
    std::filesystem::path config_path;
    std::string config_hash;  ///< FNV-1a of the config bytes, hex
    std::filesystem::path output_dir;
    std::size_t workers = 1;
    Inputs inputs;

    double english_threshold = 0.5;
    bool pronoun_evidence = true;
    bool head_only = false;

    bool stability = true;
    stability::GridSpec grid;
    stability::GridOptions grid_options;

    embed::TrainConfig embedding;  ///< per-period and whole-corpus models

    bool weat = true;
    std::size_t n_perm = 1000;
    std::uint64_t weat_seed = 0;
    double max_drop_fraction = 0.5;

    bool pmi = true;
    std::uint64_t min_support = 10;
    std::vector<std::string> trajectory_words{"free", "celebrated", "deceased", "poor"};

    bool lexicon = true;
    bool plotdata = true;
};

/// Parses and validates a config. Relative paths resolve against the config's
/// directory. Throws ConfigError when a referenced file is missing, a stage
/// lacks its inputs or an enabled stage has no explicit seed.
PipelineConfig load_config(const std::filesystem::path& path);

/// Stage names in execution order with "run" or "skip".
std::vector<std::pair<std::string, std::string>> plan(const PipelineConfig& cfg);

struct StageRecord {
    std::string name;
    std::string status;  ///< ok, failed, skipped
    double seconds = 0.0;
    std::vector<std::string> outputs;
    std::string error;
    std::vector<std::string> notes;  ///< non-fatal cell failures
};

struct RunManifest {
    std::string config_hash;
    std::vector<StageRecord> stages;
    bool complete = false;
};

/// ingest -> entities -> tokenize -> stability -> embed -> weat | pmi | lexicon -> plotdata.
/// Writes manifest.json in the output directory even on failure, then
/// rethrows the failure as StageError.
RunManifest run_pipeline(const PipelineConfig& cfg);

struct PlotdataReport {
    std::vector<std::string> written;
    std::vector<std::string> skipped;  ///< "<bundle>: <reason>"
};

/// Bundles from plane.csv, weat.csv, trajectories.csv and vad.csv in
/// `results_dir`, written to `results_dir/plotdata`. Missing inputs skip their bundle.
PlotdataReport emit_plotdata(const std::filesystem::path& results_dir);

}  // namespace histbias::pipeline
