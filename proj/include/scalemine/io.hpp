#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "scalemine/corpus.hpp"
#include "scalemine/eval.hpp"
#include "scalemine/graph.hpp"
#include "scalemine/pairs.hpp"
#include "scalemine/patterns.hpp"
#include "scalemine/scales.hpp"
#include "scalemine/tagger.hpp"

namespace scalemine {

// Record-lines (JSON object per line) writers/readers for the stage artifacts.
// Keys serialize sorted, so identical data produces identical bytes.

void write_corpus_records(std::ostream& out, const std::vector<Post>& posts);

void write_tagged_corpus(std::ostream& out, const std::vector<TaggedPost>& posts);
// Accepts both the record-lines form written above and plain word/TAG lines
// (ids "<stem>:<line>", forum = file stem).
std::vector<TaggedPost> read_tagged_corpus(const std::filesystem::path& path);

void write_matches(std::ostream& out, const std::vector<MatchedPhrase>& matches);
std::vector<MatchedPhrase> read_matches(const std::filesystem::path& path);

// Columns: weak,strong,phrase_id,forum,pattern_id
void write_pairs_csv(std::ostream& out, const std::vector<WeakStrongPair>& pairs);
std::vector<WeakStrongPair> read_pairs_csv(const std::filesystem::path& path);

void write_paths(std::ostream& out, const PathSearchResult& result);
PathSearchResult read_paths(const std::filesystem::path& path);

void write_scales(std::ostream& out, const ScaleSet& set, const AdjectiveInventory& inventory);
ScaleSet read_scales(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

// Assembled evaluation results: agreement report plus the optional corpus
// comparison (cosine matrix over frequency profiles) and t-tests.
struct EvalBundle {
    AgreementReport agreement;
    std::vector<std::string> profile_names; // sorted forum/corpus labels
    std::map<std::string, std::map<std::string, std::size_t>> profiles;
    std::vector<std::tuple<std::string, std::string, double>> cosine; // name pair, similarity
    std::vector<std::pair<std::string, TTestResult>> ttests;          // "all" / "decided"
    std::vector<std::string> ttest_notes; // e.g. zero-variance explanations
};

// Fills cosine pairs and the requested t-test vectors ("all", "decided", or
// both when selector is unset) from the agreement verdicts, mu0 = 0.5.
EvalBundle build_eval_bundle(AgreementReport agreement,
                             std::map<std::string, std::map<std::string, std::size_t>> profiles,
                             const AdjectiveInventory& inventory,
                             const std::optional<std::string>& ttest_selector);

std::string render_eval_report(const EvalBundle& bundle);
std::string eval_bundle_json(const EvalBundle& bundle);

} // namespace scalemine
