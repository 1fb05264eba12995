#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "scalemine/corpus.hpp"
#include "scalemine/eval.hpp"

namespace scalemine {

struct PipelineConfig {
    std::vector<std::filesystem::path> corpus_paths; // one file per forum
    CorpusFormat format = CorpusFormat::RecordLines;
    std::filesystem::path inventory_path;
    std::filesystem::path patterns_path;
    std::filesystem::path lexicon_path;
    std::optional<std::filesystem::path> exclusions_path;
    std::size_t window = 10;      // >= 3
    std::size_t max_skip_run = 3;
    std::size_t max_depth = 10;
    std::filesystem::path out_dir;
    TextHook text_hook;                        // optional typo-correction pre-pass
    std::optional<std::string> ttest_vector;   // "all" | "decided"; both when unset

    void validate() const; // throws DataError
};

struct PipelineResult {
    std::vector<std::filesystem::path> artifacts; // in stage order
    std::size_t posts = 0;
    std::size_t matches = 0;
    std::size_t excluded = 0;
    std::size_t pairs = 0;
    std::size_t paths = 0;
    std::size_t unique_pairs = 0;
    std::size_t scales = 0;
    AgreementReport agreement;
};

// Runs stats -> tag -> match -> pairs -> graph -> paths -> scales -> eval,
// writing every stage artifact under out_dir. Nothing is randomized; identical
// inputs and config produce byte-identical artifacts.
PipelineResult run_pipeline(const PipelineConfig& config);

} // namespace scalemine
