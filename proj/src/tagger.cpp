#include "scalemine/tagger.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "scalemine/errors.hpp"
#include "scalemine/inventory.hpp"

namespace scalemine {

namespace {

constexpr std::array<std::string_view, 33> kTagNames = {
    "CC", "CD", "DT", "EX", "IN", "JJ", "JJR", "JJS", "MD", "NN", "NNS", "NNP",
    "PDT", "POS", "PRP", "PRP$", "RB", "RBR", "RBS", "TO", "UH", "VB", "VBD",
    "VBG", "VBN", "VBP", "VBZ", "WDT", "WP", "WRB", ".", ",", ":"};

const std::unordered_map<std::string_view, Tag>& closed_class() {
    static const std::unordered_map<std::string_view, Tag> words = {
        // determiners
        {"the", Tag::DT}, {"a", Tag::DT}, {"an", Tag::DT}, {"this", Tag::DT},
        {"that", Tag::DT}, {"these", Tag::DT}, {"those", Tag::DT}, {"each", Tag::DT},
        {"every", Tag::DT}, {"either", Tag::DT}, {"neither", Tag::DT},
        {"another", Tag::DT}, {"any", Tag::DT}, {"some", Tag::DT}, {"no", Tag::DT},
        {"all", Tag::DT}, {"both", Tag::DT}, {"such", Tag::DT},
        // conjunctions
        {"and", Tag::CC}, {"but", Tag::CC}, {"or", Tag::CC}, {"nor", Tag::CC},
        // prepositions / subordinators
        {"in", Tag::IN}, {"on", Tag::IN}, {"at", Tag::IN}, {"of", Tag::IN},
        {"for", Tag::IN}, {"with", Tag::IN}, {"from", Tag::IN}, {"by", Tag::IN},
        {"as", Tag::IN}, {"if", Tag::IN}, {"like", Tag::IN}, {"than", Tag::IN},
        {"into", Tag::IN}, {"onto", Tag::IN}, {"over", Tag::IN}, {"under", Tag::IN},
        {"about", Tag::IN}, {"after", Tag::IN}, {"before", Tag::IN},
        {"between", Tag::IN}, {"through", Tag::IN}, {"against", Tag::IN},
        {"within", Tag::IN}, {"without", Tag::IN}, {"since", Tag::IN},
        {"until", Tag::IN}, {"while", Tag::IN}, {"because", Tag::IN},
        {"to", Tag::TO},
        // modals
        {"can", Tag::MD}, {"could", Tag::MD}, {"will", Tag::MD}, {"would", Tag::MD},
        {"shall", Tag::MD}, {"should", Tag::MD}, {"may", Tag::MD}, {"might", Tag::MD},
        {"must", Tag::MD}, {"cannot", Tag::MD},
        // pronouns
        {"i", Tag::PRP}, {"you", Tag::PRP}, {"he", Tag::PRP}, {"she", Tag::PRP},
        {"it", Tag::PRP}, {"we", Tag::PRP}, {"they", Tag::PRP}, {"me", Tag::PRP},
        {"him", Tag::PRP}, {"us", Tag::PRP}, {"them", Tag::PRP},
        {"myself", Tag::PRP}, {"yourself", Tag::PRP}, {"himself", Tag::PRP},
        {"herself", Tag::PRP}, {"itself", Tag::PRP}, {"ourselves", Tag::PRP},
        {"themselves", Tag::PRP}, {"mine", Tag::PRP}, {"yours", Tag::PRP},
        {"hers", Tag::PRP}, {"ours", Tag::PRP}, {"theirs", Tag::PRP},
        {"my", Tag::PRPS}, {"your", Tag::PRPS}, {"his", Tag::PRPS},
        {"its", Tag::PRPS}, {"our", Tag::PRPS}, {"their", Tag::PRPS},
        {"her", Tag::PRPS},
        // negation
        {"not", Tag::RB}, {"never", Tag::RB},
        // existential, wh-words, interjections
        {"there", Tag::EX}, {"which", Tag::WDT}, {"what", Tag::WDT},
        {"whatever", Tag::WDT}, {"who", Tag::WP}, {"whom", Tag::WP},
        {"whose", Tag::WP}, {"when", Tag::WRB}, {"where", Tag::WRB},
        {"why", Tag::WRB}, {"how", Tag::WRB},
        {"oh", Tag::UH}, {"hey", Tag::UH}, {"wow", Tag::UH}, {"yeah", Tag::UH},
        {"um", Tag::UH}, {"uh", Tag::UH},
    };
    return words;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool is_punct_token(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::ispunct(c) != 0;
    });
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

} // namespace

std::string_view tag_name(Tag t) {
    return kTagNames[static_cast<std::size_t>(t)];
}

std::optional<Tag> tag_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kTagNames.size(); ++i)
        if (kTagNames[i] == name) return static_cast<Tag>(i);
    return std::nullopt;
}

bool is_adjective_tag(Tag t) {
    return t == Tag::JJ || t == Tag::JJR || t == Tag::JJS;
}

bool is_noun_tag(Tag t) {
    return t == Tag::NN || t == Tag::NNS || t == Tag::NNP;
}

Tagger Tagger::load(const std::filesystem::path& lexicon_path) {
    std::ifstream in(lexicon_path);
    if (!in) throw DataError("cannot read lexicon file: " + lexicon_path.string());
    std::map<std::string, Tag, std::less<>> lexicon;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ss(stripped);
        std::string word, tag;
        if (!(ss >> word)) continue;
        if (!(ss >> tag))
            throw DataError(lexicon_path.string() + ":" + std::to_string(lineno) +
                            ": expected 'word TAG'");
        auto t = tag_from_name(tag);
        if (!t)
            throw DataError(lexicon_path.string() + ":" + std::to_string(lineno) +
                            ": unknown tag '" + tag + "'");
        lexicon[word] = *t;
    }
    return with_lexicon(std::move(lexicon));
}

Tagger Tagger::with_lexicon(std::map<std::string, Tag, std::less<>> lexicon) {
    Tagger t;
    t.lexicon_ = std::move(lexicon);
    return t;
}

std::vector<TaggedToken> Tagger::tag(const std::vector<std::string>& tokens,
                                     const std::string& post_id) const {
    std::vector<TaggedToken> out;
    out.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& w = tokens[i];
        Tag tag = Tag::NN;
        if (w == "." || w == "!" || w == "?") {
            tag = Tag::SentFinal;
        } else if (w == ",") {
            tag = Tag::Comma;
        } else if (is_punct_token(w)) {
            tag = Tag::Sym;
        } else if (auto cc = closed_class().find(w); cc != closed_class().end()) {
            tag = cc->second;
        } else if (auto lx = lexicon_.find(w); lx != lexicon_.end()) {
            tag = lx->second;
        } else if (all_digits(w)) {
            tag = Tag::CD;
        } else if (w.size() >= 3 && ends_with(w, "s") && !ends_with(w, "ss")) {
            tag = Tag::NNS;
        } else if (w.size() >= 4 && ends_with(w, "ly")) {
            tag = Tag::RB;
        } else if (w.size() >= 4 && ends_with(w, "ed")) {
            tag = Tag::VB;
        } else if (w.size() >= 5 && ends_with(w, "ing")) {
            tag = Tag::VB;
        } else if (w.size() >= 4 && ends_with(w, "est")) {
            tag = Tag::JJS;
        } else if (w.size() >= 4 && ends_with(w, "er")) {
            tag = Tag::JJR;
        }
        out.push_back(TaggedToken{w, w, tag, post_id, i});
    }
    return out;
}

std::vector<TaggedToken> apply_ing_override(std::vector<TaggedToken> tagged) {
    // Conditions are evaluated against the incoming tags, then applied at once.
    std::vector<bool> flip(tagged.size(), false);
    for (std::size_t i = 0; i + 1 < tagged.size(); ++i) {
        if (tagged[i].surface.size() > 3 && ends_with(tagged[i].surface, "ing") &&
            is_noun_tag(tagged[i + 1].tag))
            flip[i] = true;
    }
    for (std::size_t i = 0; i < tagged.size(); ++i)
        if (flip[i]) tagged[i].tag = Tag::JJ;
    return tagged;
}

std::vector<TaggedToken> apply_inventory_override(std::vector<TaggedToken> tagged,
                                                  const AdjectiveInventory& inventory) {
    for (auto& t : tagged)
        if (inventory.lemma_for_surface(t.surface)) t.tag = Tag::JJ;
    return tagged;
}

std::vector<TaggedToken> tag_pipeline(const Tagger& tagger,
                                      const std::vector<std::string>& tokens,
                                      const AdjectiveInventory& inventory,
                                      const std::string& post_id) {
    return apply_inventory_override(apply_ing_override(tagger.tag(tokens, post_id)), inventory);
}

std::vector<TaggedToken> parse_pretagged(std::string_view line, const std::string& post_id) {
    std::vector<TaggedToken> out;
    std::istringstream ss{std::string(line)};
    std::string tok;
    std::size_t index = 0;
    while (ss >> tok) {
        std::size_t slash = tok.rfind('/');
        if (slash == std::string::npos || slash == 0 || slash + 1 == tok.size())
            throw DataError("pretagged token '" + tok + "' lacks a word/TAG separator");
        std::string surface = tok.substr(0, slash);
        std::string tagname = tok.substr(slash + 1);
        std::transform(tagname.begin(), tagname.end(), tagname.begin(),
                       [](unsigned char c) { return std::toupper(c); });
        auto tag = tag_from_name(tagname);
        if (!tag) throw DataError("unknown tag '" + tagname + "' in pretagged token '" + tok + "'");
        out.push_back(TaggedToken{surface, surface, *tag, post_id, index});
        ++index;
    }
    return out;
}

std::string format_pretagged(const std::vector<TaggedToken>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ' ';
        out += tokens[i].surface;
        out += '/';
        out += tag_name(tokens[i].tag);
    }
    return out;
}

} // namespace scalemine
