#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "scalemine/tagger.hpp"

namespace scalemine {

struct Post {
    std::string id;
    std::string forum;
    std::string text;
};

enum class CorpusFormat { PlainLines, RecordLines };

CorpusFormat corpus_format_from_name(const std::string& name); // "plain" | "records"

// Optional text pre-pass (e.g. a typo corrector), applied to post text before
// anything else. Unset by default.
using TextHook = std::function<std::string(const std::string&)>;

struct LoadReport {
    std::vector<Post> posts;
    std::size_t dropped_empty = 0;
    std::size_t malformed = 0;
    std::vector<std::string> warnings; // one per malformed/dropped line, with line number
};

// plain-lines: one post per line, id "<stem>:<line index>", forum = file stem.
// record-lines: one JSON object per line with fields id, forum, text.
// Malformed record lines are counted and skipped, not fatal.
LoadReport load_corpus(const std::filesystem::path& path, CorpusFormat format,
                       const TextHook& hook = nullptr);

// Lowercasing whitespace/punctuation tokenizer. Punctuation becomes its own
// token; word-internal hyphens stay; clitics ('s 't 're 've 'll 'd 'm) stay
// attached to their apostrophe. Idempotent on its own space-joined output.
std::vector<std::string> tokenize(std::string_view text);

struct CorpusStats {
    std::size_t total_words = 0;
    double mean_post_length = 0.0;
    double median_post_length = 0.0;
    std::size_t min_post_length = 0;
    std::size_t max_post_length = 0;
    std::size_t unique_tokens = 0;
    double type_token_ratio = 0.0; // unique_tokens / total_words, in [0,1]
    std::size_t total_adjectives = 0;  // tokens tagged JJ/JJR/JJS
    std::size_t unique_adjectives = 0; // distinct surfaces among those
};

// tagged must correspond 1:1 to posts. Empty corpus is an error.
CorpusStats compute_stats(const std::vector<Post>& posts,
                          const std::vector<std::vector<TaggedToken>>& tagged);

std::string render_stats_report(const std::string& name, const CorpusStats& stats);

} // namespace scalemine
