#include "scalemine/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "scalemine/errors.hpp"

namespace scalemine {

namespace {

bool is_word_char(unsigned char c) {
    return std::isalnum(c) != 0 || c >= 0x80;
}

char fold(unsigned char c) {
    return static_cast<char>(std::tolower(c));
}

// Clitic suffixes kept attached to their apostrophe so the tokenizer is
// stable on its own output.
bool is_clitic(std::string_view tok) {
    static const std::set<std::string_view> clitics = {"'s", "'t", "'re", "'ve",
                                                       "'ll", "'d", "'m", "n't"};
    return clitics.count(tok) > 0;
}

void flush_word(std::string& cur, std::vector<std::string>& out) {
    if (cur.empty()) return;
    if (cur.front() == '\'' && cur.size() > 1 && !is_clitic(cur)) {
        out.emplace_back("'");
        out.push_back(cur.substr(1));
    } else {
        out.push_back(cur);
    }
    cur.clear();
}

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace

CorpusFormat corpus_format_from_name(const std::string& name) {
    if (name == "plain" || name == "plain-lines") return CorpusFormat::PlainLines;
    if (name == "records" || name == "record-lines") return CorpusFormat::RecordLines;
    throw DataError("unknown corpus format '" + name + "' (expected plain or records)");
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            flush_word(cur, out);
            continue;
        }
        if (is_word_char(c)) {
            cur += fold(c);
            continue;
        }
        if (c == '-' && !cur.empty() && i + 1 < text.size() &&
            is_word_char(static_cast<unsigned char>(text[i + 1]))) {
            cur += '-'; // word-internal hyphen
            continue;
        }
        if (c == '\'' && i + 1 < text.size() &&
            is_word_char(static_cast<unsigned char>(text[i + 1]))) {
            flush_word(cur, out);
            cur += '\''; // candidate clitic; flush_word decides
            continue;
        }
        flush_word(cur, out);
        out.emplace_back(1, static_cast<char>(c));
    }
    flush_word(cur, out);
    return out;
}

LoadReport load_corpus(const std::filesystem::path& path, CorpusFormat format,
                       const TextHook& hook) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read corpus file: " + path.string());

    const std::string stem = path.stem().string();
    LoadReport report;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        std::size_t idx = lineno++;
        std::string id, forum, text;
        if (format == CorpusFormat::PlainLines) {
            id = stem + ":" + std::to_string(idx);
            forum = stem;
            text = line;
        } else {
            if (trim(line).empty()) continue; // blank separator lines are not records
            nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
            if (rec.is_discarded() || !rec.is_object() || !rec.contains("id") ||
                !rec.contains("forum") || !rec.contains("text") ||
                !rec["id"].is_string() || !rec["forum"].is_string() || !rec["text"].is_string()) {
                ++report.malformed;
                report.warnings.push_back(path.filename().string() + ":" +
                                          std::to_string(idx + 1) + ": malformed record line");
                continue;
            }
            id = rec["id"].get<std::string>();
            forum = rec["forum"].get<std::string>();
            text = rec["text"].get<std::string>();
        }
        if (hook) text = hook(text);
        if (trim(text).empty()) {
            ++report.dropped_empty;
            continue;
        }
        report.posts.push_back(Post{std::move(id), std::move(forum), std::move(text)});
    }
    // post_id uniqueness within the corpus
    std::set<std::string> seen;
    for (const auto& p : report.posts) {
        if (!seen.insert(p.id).second)
            throw DataError("duplicate post id '" + p.id + "' in " + path.string());
    }
    return report;
}

CorpusStats compute_stats(const std::vector<Post>& posts,
                          const std::vector<std::vector<TaggedToken>>& tagged) {
    if (posts.empty()) throw DataError("cannot compute statistics of an empty corpus");
    if (posts.size() != tagged.size())
        throw InternalError("compute_stats: tagged sequences do not correspond 1:1 to posts");

    CorpusStats s;
    std::vector<std::size_t> lengths;
    std::set<std::string> types;
    std::set<std::string> adj_types;
    for (const auto& toks : tagged) {
        lengths.push_back(toks.size());
        s.total_words += toks.size();
        for (const auto& t : toks) {
            types.insert(t.surface);
            if (is_adjective_tag(t.tag)) {
                ++s.total_adjectives;
                adj_types.insert(t.surface);
            }
        }
    }
    if (s.total_words == 0) throw DataError("cannot compute statistics: corpus has no tokens");

    std::sort(lengths.begin(), lengths.end());
    s.min_post_length = lengths.front();
    s.max_post_length = lengths.back();
    s.mean_post_length = static_cast<double>(s.total_words) / static_cast<double>(lengths.size());
    std::size_t n = lengths.size();
    s.median_post_length = (n % 2 == 1)
        ? static_cast<double>(lengths[n / 2])
        : (static_cast<double>(lengths[n / 2 - 1]) + static_cast<double>(lengths[n / 2])) / 2.0;
    s.unique_tokens = types.size();
    s.type_token_ratio = static_cast<double>(s.unique_tokens) / static_cast<double>(s.total_words);
    s.unique_adjectives = adj_types.size();
    return s;
}

std::string render_stats_report(const std::string& name, const CorpusStats& s) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << "corpus: " << name << "\n";
    out << "  total words (tokens):  " << s.total_words << "\n";
    out << std::fixed << std::setprecision(2);
    out << "  mean post length:      " << s.mean_post_length << "\n";
    out << "  median post length:    " << s.median_post_length << "\n";
    out << "  post length range:     " << s.min_post_length << ", " << s.max_post_length << "\n";
    out << "  unique tokens:         " << s.unique_tokens << "\n";
    out << std::setprecision(4);
    out << "  type/token ratio (%):  " << s.type_token_ratio * 100.0 << "\n";
    out << "  total adjectives:      " << s.total_adjectives << "\n";
    out << "  unique adjectives:     " << s.unique_adjectives << "\n";
    return out.str();
}

} // namespace scalemine
