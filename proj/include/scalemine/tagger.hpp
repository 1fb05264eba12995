#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scalemine {

class AdjectiveInventory;

// Closed tagset. SentFinal covers . ! ? and serializes as ".", Comma as ",",
// Sym as ":" (any other punctuation-only token).
enum class Tag : std::uint8_t {
    CC, CD, DT, EX, IN, JJ, JJR, JJS, MD, NN, NNS, NNP, PDT, POS,
    PRP, PRPS, RB, RBR, RBS, TO, UH, VB, VBD, VBG, VBN, VBP, VBZ,
    WDT, WP, WRB, SentFinal, Comma, Sym
};

std::string_view tag_name(Tag t);
std::optional<Tag> tag_from_name(std::string_view name);

bool is_adjective_tag(Tag t); // JJ, JJR, JJS
bool is_noun_tag(Tag t);      // NN, NNS, NNP

struct TaggedToken {
    std::string surface;
    std::string lemma;   // equals surface until pair extraction fills it
    Tag tag = Tag::NN;
    std::string post_id;
    std::size_t index = 0;

    bool operator==(const TaggedToken&) const = default;
};

struct TaggedPost {
    std::string id;
    std::string forum;
    std::vector<TaggedToken> tokens;
};

// Deterministic lexicon-plus-rules tagger. Lookup order per token:
// closed-class word, shipped frequency lexicon, digit check, suffix rules
// (-s -ly -ed -ing -est -er), default NN.
class Tagger {
public:
    static Tagger load(const std::filesystem::path& lexicon_path);
    static Tagger with_lexicon(std::map<std::string, Tag, std::less<>> lexicon);

    std::vector<TaggedToken> tag(const std::vector<std::string>& tokens,
                                 const std::string& post_id = {}) const;

    std::size_t lexicon_size() const { return lexicon_.size(); }

private:
    Tagger() = default;
    std::map<std::string, Tag, std::less<>> lexicon_;
};

// -ing word immediately before a noun becomes JJ; everything else unchanged.
std::vector<TaggedToken> apply_ing_override(std::vector<TaggedToken> tagged);

// Every inventory surface form becomes JJ regardless of its current tag.
std::vector<TaggedToken> apply_inventory_override(std::vector<TaggedToken> tagged,
                                                  const AdjectiveInventory& inventory);

// tag, then the -ing override, then the inventory override, in that order.
std::vector<TaggedToken> tag_pipeline(const Tagger& tagger,
                                      const std::vector<std::string>& tokens,
                                      const AdjectiveInventory& inventory,
                                      const std::string& post_id = {});

// "word/TAG word/TAG ..." one post per line. Unknown tags and separator-less
// tokens are rejected.
std::vector<TaggedToken> parse_pretagged(std::string_view line,
                                         const std::string& post_id = {});
std::string format_pretagged(const std::vector<TaggedToken>& tokens);

} // namespace scalemine
