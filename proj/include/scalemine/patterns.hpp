#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scalemine/inventory.hpp"
#include "scalemine/tagger.hpp"

namespace scalemine {

// MILD: left adjective is the weak one. INTENSE: left adjective is the strong one.
enum class Polarity { Mild, Intense };

std::string_view polarity_name(Polarity p);
std::optional<Polarity> polarity_from_name(std::string_view name);

// One fully literal expansion of a pattern: required tokens before the left
// adjective group, the connective between the groups, required tokens after
// the right group.
struct PatternVariant {
    std::vector<std::string> pre;
    std::vector<std::string> connective;
    std::vector<std::string> post;
};

struct PatternSpec {
    enum class Source { Table3, User };

    std::string id;
    Polarity polarity = Polarity::Mild;
    Source source = Source::Table3;
    std::vector<PatternVariant> variants; // longest connective first
};

// One pattern per line: `pattern_id; polarity; slot; slot; ...`
// Slots are template tokens with X and Y marking the adjective sites.
// A slot lists '|'-separated alternatives; an alternative may be multi-token
// ("if not"); "(word)" is an optional token. '#' starts a comment.
std::vector<PatternSpec> load_patterns(const std::filesystem::path& path);
PatternSpec parse_pattern_line(std::string_view line, PatternSpec::Source source);

struct MatchedPhrase {
    std::string phrase_id; // "<post_id>:<connective index>:<pattern_id>", stable across runs
    std::string pattern_id;
    Polarity polarity = Polarity::Mild;
    std::string post_id;
    std::string forum;
    std::size_t index = 0;                                    // connective start within the post
    std::vector<TaggedToken> window;                          // at most `window` tokens
    std::pair<std::size_t, std::size_t> connective_span{0, 0}; // [begin, end) within window
    std::vector<std::string> left_lemmas;                     // inventory lemmas, textual order
    std::vector<std::string> right_lemmas;
};

struct ScanOptions {
    std::size_t window = 10;      // at least 3
    std::size_t max_skip_run = 3; // consecutive RB/DT tokens allowed per side
};

// Scan tagged posts for pattern instances. A match needs at least one
// inventory adjective on each side of the connective; sides are collected by
// skipping RB/DT, collecting JJ, continuing through JJ/RB/CC/comma runs, and
// stopping at anything else, sentence-final punctuation, or the window edge.
std::vector<MatchedPhrase> scan(const std::vector<TaggedPost>& posts,
                                const std::vector<PatternSpec>& patterns,
                                const AdjectiveInventory& inventory,
                                const ScanOptions& options = {});

enum class ExclusionReason { WrongTopic, WrongTag, WrongNoun, Unspecified };

std::string_view exclusion_reason_name(ExclusionReason r);

struct ExclusionReport {
    std::vector<MatchedPhrase> kept;
    std::map<std::string, std::size_t> removed_by_reason; // reason name -> count
    std::size_t removed_total = 0;
    std::vector<std::string> warnings; // ids not present in the match list
};

// Exclusion file: one phrase_id per line, optionally followed by a reason code
// (WRONG_TOPIC, WRONG_TAG, WRONG_NOUN). Pure set subtraction.
ExclusionReport apply_exclusions(std::vector<MatchedPhrase> matches,
                                 const std::filesystem::path& exclusion_file);

} // namespace scalemine
