#include "scalemine/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "scalemine/errors.hpp"
#include "scalemine/pairs.hpp"

namespace scalemine {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(trim(s.substr(start)));
            break;
        }
        parts.push_back(trim(s.substr(start, pos - start)));
        start = pos + 1;
    }
    return parts;
}

std::vector<std::string> split_ws(std::string_view s) {
    std::istringstream ss{std::string(s)};
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

bool equals_folded(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

// A template slot: alternatives, each a token sequence; may be optional.
struct Slot {
    std::vector<std::vector<std::string>> alternatives;
    bool optional = false;
    bool is_site = false; // X or Y
};

Slot parse_slot(const std::string& text, std::string_view context) {
    Slot slot;
    std::string body = text;
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
        slot.optional = true;
        body = trim(body.substr(1, body.size() - 2));
    }
    if (body == "X" || body == "Y") {
        slot.is_site = true;
        slot.alternatives.push_back({body});
        return slot;
    }
    for (const auto& alt : split(body, '|')) {
        auto tokens = split_ws(alt);
        if (tokens.empty())
            throw DataError(std::string(context) + ": empty alternation slot");
        for (auto& t : tokens)
            std::transform(t.begin(), t.end(), t.begin(),
                           [](unsigned char c) { return std::tolower(c); });
        slot.alternatives.push_back(std::move(tokens));
    }
    if (slot.alternatives.empty())
        throw DataError(std::string(context) + ": empty alternation slot");
    return slot;
}

void expand_slots(const std::vector<Slot>& slots, std::size_t at, std::size_t x_pos,
                  std::size_t y_pos, PatternVariant cur, std::vector<PatternVariant>& out,
                  std::size_t slot_index) {
    if (at == slots.size()) {
        out.push_back(cur);
        return;
    }
    const Slot& slot = slots.at(at);
    auto emit = [&](const std::vector<std::string>* alt) {
        PatternVariant next = cur;
        if (alt) {
            auto& section = slot_index < x_pos ? next.pre
                           : slot_index < y_pos ? next.connective
                                                : next.post;
            for (const auto& t : *alt) section.push_back(t);
        }
        expand_slots(slots, at + 1, x_pos, y_pos, std::move(next), out, slot_index + 1);
    };
    if (slot.optional) emit(nullptr);
    for (const auto& alt : slot.alternatives) emit(&alt);
}

// The textual zone on one side of a connective occurrence: its maximal extent
// and the positions of collected JJ tokens, honoring the skip-run limit.
struct Zone {
    std::size_t extent = 0;                // boundary position (exclusive of connective)
    std::vector<std::size_t> adjectives;   // positions of JJ tokens within the extent
};

bool zone_continues(Tag t) {
    return t == Tag::JJ || t == Tag::RB || t == Tag::CC || t == Tag::Comma || t == Tag::DT;
}

bool is_skippable(Tag t) { return t == Tag::RB || t == Tag::DT; }

Zone scan_left_zone(const std::vector<TaggedToken>& toks, std::size_t conn_begin,
                    const ScanOptions& opts) {
    Zone z;
    z.extent = conn_begin;
    std::size_t run = 0;
    std::size_t lo = conn_begin > opts.window ? conn_begin - opts.window : 0;
    while (z.extent > lo) {
        const Tag t = toks[z.extent - 1].tag;
        if (!zone_continues(t)) break;
        if (is_skippable(t)) {
            if (++run > opts.max_skip_run) break;
        } else {
            run = 0;
        }
        --z.extent;
        if (t == Tag::JJ) z.adjectives.push_back(z.extent);
    }
    std::reverse(z.adjectives.begin(), z.adjectives.end());
    return z;
}

Zone scan_right_zone(const std::vector<TaggedToken>& toks, std::size_t conn_end,
                     const ScanOptions& opts) {
    Zone z;
    z.extent = conn_end;
    std::size_t run = 0;
    std::size_t hi = std::min(toks.size(), conn_end + opts.window);
    while (z.extent < hi) {
        const Tag t = toks[z.extent].tag;
        if (!zone_continues(t)) break;
        if (is_skippable(t)) {
            if (++run > opts.max_skip_run) break;
        } else {
            run = 0;
        }
        if (t == Tag::JJ) z.adjectives.push_back(z.extent);
        ++z.extent;
    }
    return z;
}

bool literal_match(const std::vector<TaggedToken>& toks, std::size_t at,
                   const std::vector<std::string>& words) {
    if (at + words.size() > toks.size()) return false;
    for (std::size_t i = 0; i < words.size(); ++i)
        if (!equals_folded(toks[at + i].surface, words[i])) return false;
    return true;
}

// Zone cuts compatible with a required literal block on the outside.
// Left side: cut c means the zone is [c, conn); pre must sit at [c-|pre|, c).
std::vector<std::size_t> left_cuts(const std::vector<TaggedToken>& toks, const Zone& z,
                                   std::size_t conn_begin, const std::vector<std::string>& pre) {
    std::vector<std::size_t> cuts;
    for (std::size_t c = z.extent; c < conn_begin; ++c) {
        if (!pre.empty()) {
            if (c < pre.size()) continue;
            if (!literal_match(toks, c - pre.size(), pre)) continue;
        }
        cuts.push_back(c); // ascending c, so largest zone first
    }
    return cuts;
}

std::vector<std::size_t> right_cuts(const std::vector<TaggedToken>& toks, const Zone& z,
                                    std::size_t conn_end, const std::vector<std::string>& post) {
    std::vector<std::size_t> cuts;
    for (std::size_t c = z.extent; c > conn_end; --c) {
        if (!post.empty() && !literal_match(toks, c, post)) continue;
        cuts.push_back(c); // zone is [conn_end, c)
    }
    return cuts;
}

} // namespace

std::string_view polarity_name(Polarity p) {
    return p == Polarity::Mild ? "MILD" : "INTENSE";
}

std::optional<Polarity> polarity_from_name(std::string_view name) {
    if (name == "MILD" || name == "mild") return Polarity::Mild;
    if (name == "INTENSE" || name == "intense") return Polarity::Intense;
    return std::nullopt;
}

PatternSpec parse_pattern_line(std::string_view line, PatternSpec::Source source) {
    auto fields = split(line, ';');
    if (fields.size() < 3)
        throw DataError("pattern line needs 'id; polarity; slots...': " + std::string(line));
    PatternSpec spec;
    spec.id = fields[0];
    spec.source = source;
    auto pol = polarity_from_name(fields[1]);
    if (!pol) throw DataError("pattern '" + spec.id + "': unknown polarity '" + fields[1] + "'");
    spec.polarity = *pol;

    std::vector<Slot> slots;
    std::size_t x_pos = std::string::npos, y_pos = std::string::npos;
    for (std::size_t i = 2; i < fields.size(); ++i) {
        Slot s = parse_slot(fields[i], "pattern '" + spec.id + "'");
        if (s.is_site) {
            if (s.alternatives[0][0] == "X") {
                if (x_pos != std::string::npos)
                    throw DataError("pattern '" + spec.id + "': duplicate X site");
                x_pos = slots.size();
            } else {
                if (y_pos != std::string::npos)
                    throw DataError("pattern '" + spec.id + "': duplicate Y site");
                y_pos = slots.size();
            }
            slots.push_back(std::move(s));
            continue;
        }
        slots.push_back(std::move(s));
    }
    if (x_pos == std::string::npos || y_pos == std::string::npos || y_pos < x_pos)
        throw DataError("pattern '" + spec.id + "': template must contain X before Y");
    if (y_pos - x_pos < 2)
        throw DataError("pattern '" + spec.id + "': empty connective between X and Y");

    // Drop the site slots themselves before expansion.
    std::vector<Slot> material;
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (i != x_pos && i != y_pos) material.push_back(slots[i]);
    // Positions of X and Y within the material sequence.
    std::size_t x_mat = x_pos;
    std::size_t y_mat = y_pos - 1;

    expand_slots(material, 0, x_mat, y_mat, PatternVariant{}, spec.variants, 0);
    for (const auto& v : spec.variants) {
        if (v.connective.empty())
            throw DataError("pattern '" + spec.id + "': empty connective variant");
        if (v.connective.size() > 4)
            throw DataError("pattern '" + spec.id + "': connective longer than 4 tokens");
    }
    std::stable_sort(spec.variants.begin(), spec.variants.end(),
                     [](const PatternVariant& a, const PatternVariant& b) {
                         return a.connective.size() > b.connective.size();
                     });
    return spec;
}

std::vector<PatternSpec> load_patterns(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read pattern file: " + path.string());
    std::vector<PatternSpec> specs;
    std::set<std::string> ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        PatternSpec spec;
        try {
            spec = parse_pattern_line(stripped, PatternSpec::Source::Table3);
        } catch (const DataError& e) {
            throw DataError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (!ids.insert(spec.id).second)
            throw DataError(path.string() + ":" + std::to_string(lineno) +
                            ": duplicate pattern id '" + spec.id + "'");
        specs.push_back(std::move(spec));
    }
    return specs;
}

namespace {

struct SideResult {
    std::size_t cut = 0;
    std::vector<std::string> lemmas;
    std::size_t span_edge = 0; // construction boundary including pre/post
};

std::vector<std::string> collect_lemmas(const std::vector<TaggedToken>& toks,
                                        const std::vector<std::size_t>& positions,
                                        std::size_t lo, std::size_t hi,
                                        const AdjectiveInventory& inventory) {
    std::vector<std::string> lemmas;
    for (std::size_t p : positions) {
        if (p < lo || p >= hi) continue;
        std::string lemma = lemmatize(toks[p].surface, inventory);
        if (!inventory.is_lemma(lemma)) continue;
        if (std::find(lemmas.begin(), lemmas.end(), lemma) == lemmas.end())
            lemmas.push_back(lemma);
    }
    return lemmas;
}

} // namespace

std::vector<MatchedPhrase> scan(const std::vector<TaggedPost>& posts,
                                const std::vector<PatternSpec>& patterns,
                                const AdjectiveInventory& inventory,
                                const ScanOptions& options) {
    if (options.window < 3)
        throw DataError("scan window must be at least 3 tokens");

    std::vector<MatchedPhrase> out;
    std::set<std::tuple<std::string, std::size_t, std::string>> seen;

    for (const auto& post : posts) {
        const auto& toks = post.tokens;
        for (std::size_t i = 0; i < toks.size(); ++i) {
            for (const auto& pattern : patterns) {
                if (seen.count({post.id, i, pattern.id})) continue;
                for (const auto& variant : pattern.variants) {
                    if (!literal_match(toks, i, variant.connective)) continue;
                    const std::size_t conn_end = i + variant.connective.size();

                    Zone lz = scan_left_zone(toks, i, options);
                    Zone rz = scan_right_zone(toks, conn_end, options);
                    if (lz.adjectives.empty() || rz.adjectives.empty()) continue;

                    auto lcuts = left_cuts(toks, lz, i, variant.pre);
                    auto rcuts = right_cuts(toks, rz, conn_end, variant.post);

                    // Largest zones first; first combination that fits the
                    // window and keeps an inventory adjective per side wins.
                    bool matched = false;
                    MatchedPhrase phrase;
                    for (std::size_t lc : lcuts) {
                        auto left = collect_lemmas(toks, lz.adjectives, lc, i, inventory);
                        if (left.empty()) continue;
                        for (std::size_t rc : rcuts) {
                            auto right = collect_lemmas(toks, rz.adjectives, conn_end, rc, inventory);
                            if (right.empty()) continue;
                            std::size_t span_begin = lc - variant.pre.size();
                            std::size_t span_end = rc + variant.post.size();
                            if (span_end - span_begin > options.window) continue;

                            // Pad the construction with balanced context, left first.
                            std::size_t wb = span_begin, we = span_end;
                            bool left_turn = true;
                            while (we - wb < options.window && (wb > 0 || we < toks.size())) {
                                if (left_turn && wb > 0) --wb;
                                else if (!left_turn && we < toks.size()) ++we;
                                else if (wb > 0) --wb;
                                else ++we;
                                left_turn = !left_turn;
                            }

                            phrase.pattern_id = pattern.id;
                            phrase.polarity = pattern.polarity;
                            phrase.post_id = post.id;
                            phrase.forum = post.forum;
                            phrase.index = i;
                            phrase.phrase_id = post.id + ":" + std::to_string(i) + ":" + pattern.id;
                            phrase.window.assign(toks.begin() + static_cast<std::ptrdiff_t>(wb),
                                                 toks.begin() + static_cast<std::ptrdiff_t>(we));
                            phrase.connective_span = {i - wb, conn_end - wb};
                            phrase.left_lemmas = std::move(left);
                            phrase.right_lemmas = std::move(right);
                            matched = true;
                            break;
                        }
                        if (matched) break;
                    }
                    if (matched) {
                        seen.insert({post.id, i, pattern.id});
                        out.push_back(std::move(phrase));
                        break; // first variant wins at this position
                    }
                }
            }
        }
    }
    return out;
}

std::string_view exclusion_reason_name(ExclusionReason r) {
    switch (r) {
        case ExclusionReason::WrongTopic: return "WRONG_TOPIC";
        case ExclusionReason::WrongTag: return "WRONG_TAG";
        case ExclusionReason::WrongNoun: return "WRONG_NOUN";
        case ExclusionReason::Unspecified: return "UNSPECIFIED";
    }
    return "UNSPECIFIED";
}

ExclusionReport apply_exclusions(std::vector<MatchedPhrase> matches,
                                 const std::filesystem::path& exclusion_file) {
    std::ifstream in(exclusion_file);
    if (!in) throw DataError("cannot read exclusion file: " + exclusion_file.string());

    std::map<std::string, std::string> excluded; // phrase_id -> reason name
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = trim(line.substr(0, line.find('#')));
        if (stripped.empty()) continue;
        std::istringstream ss(stripped);
        std::string id, reason;
        ss >> id;
        if (!(ss >> reason)) reason = "UNSPECIFIED";
        if (reason != "WRONG_TOPIC" && reason != "WRONG_TAG" && reason != "WRONG_NOUN" &&
            reason != "UNSPECIFIED")
            throw DataError(exclusion_file.string() + ":" + std::to_string(lineno) +
                            ": unknown reason code '" + reason + "'");
        excluded[id] = reason;
    }

    ExclusionReport report;
    std::set<std::string> present;
    for (const auto& m : matches) present.insert(m.phrase_id);
    for (const auto& [id, reason] : excluded) {
        if (!present.count(id))
            report.warnings.push_back("exclusion id not present in matches: " + id);
    }
    for (auto& m : matches) {
        auto it = excluded.find(m.phrase_id);
        if (it == excluded.end()) {
            report.kept.push_back(std::move(m));
        } else {
            ++report.removed_by_reason[it->second];
            ++report.removed_total;
        }
    }
    return report;
}

} // namespace scalemine
