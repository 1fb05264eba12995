#include "scalemine/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "scalemine/errors.hpp"

namespace scalemine {

namespace {

using nlohmann::json;

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read file: " + path.string());
    return in;
}

json parse_record(const std::string& line, const std::filesystem::path& path, std::size_t lineno) {
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object())
        throw DataError(path.string() + ":" + std::to_string(lineno) + ": malformed record line");
    return rec;
}

} // namespace

void write_corpus_records(std::ostream& out, const std::vector<Post>& posts) {
    for (const auto& p : posts) {
        json rec{{"id", p.id}, {"forum", p.forum}, {"text", p.text}};
        out << rec.dump() << "\n";
    }
}

void write_tagged_corpus(std::ostream& out, const std::vector<TaggedPost>& posts) {
    for (const auto& p : posts) {
        json rec{{"id", p.id}, {"forum", p.forum}, {"tagged", format_pretagged(p.tokens)}};
        out << rec.dump() << "\n";
    }
}

std::vector<TaggedPost> read_tagged_corpus(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    const std::string stem = path.stem().string();
    std::vector<TaggedPost> posts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        TaggedPost post;
        if (line.front() == '{') {
            json rec = parse_record(line, path, lineno);
            if (!rec.contains("id") || !rec.contains("tagged"))
                throw DataError(path.string() + ":" + std::to_string(lineno) +
                                ": tagged record needs id and tagged fields");
            post.id = rec["id"].get<std::string>();
            post.forum = rec.value("forum", stem);
            post.tokens = parse_pretagged(rec["tagged"].get<std::string>(), post.id);
        } else {
            post.id = stem + ":" + std::to_string(lineno - 1);
            post.forum = stem;
            post.tokens = parse_pretagged(line, post.id);
        }
        posts.push_back(std::move(post));
    }
    return posts;
}

void write_matches(std::ostream& out, const std::vector<MatchedPhrase>& matches) {
    for (const auto& m : matches) {
        std::string window_text;
        for (std::size_t i = 0; i < m.window.size(); ++i) {
            if (i) window_text += ' ';
            window_text += m.window[i].surface;
        }
        json rec{{"phrase_id", m.phrase_id},
                 {"pattern_id", m.pattern_id},
                 {"polarity", std::string(polarity_name(m.polarity))},
                 {"post_id", m.post_id},
                 {"forum", m.forum},
                 {"index", m.index},
                 {"window", window_text},
                 {"window_tagged", format_pretagged(m.window)},
                 {"connective_span", {m.connective_span.first, m.connective_span.second}},
                 {"left", m.left_lemmas},
                 {"right", m.right_lemmas}};
        out << rec.dump() << "\n";
    }
}

std::vector<MatchedPhrase> read_matches(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    std::vector<MatchedPhrase> matches;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json rec = parse_record(line, path, lineno);
        MatchedPhrase m;
        try {
            m.phrase_id = rec.at("phrase_id").get<std::string>();
            m.pattern_id = rec.at("pattern_id").get<std::string>();
            auto pol = polarity_from_name(rec.at("polarity").get<std::string>());
            if (!pol) throw DataError("unknown polarity");
            m.polarity = *pol;
            m.post_id = rec.at("post_id").get<std::string>();
            m.forum = rec.value("forum", "");
            m.index = rec.at("index").get<std::size_t>();
            m.window = parse_pretagged(rec.at("window_tagged").get<std::string>(), m.post_id);
            m.connective_span = {rec.at("connective_span")[0].get<std::size_t>(),
                                 rec.at("connective_span")[1].get<std::size_t>()};
            m.left_lemmas = rec.at("left").get<std::vector<std::string>>();
            m.right_lemmas = rec.at("right").get<std::vector<std::string>>();
        } catch (const json::exception& e) {
            throw DataError(path.string() + ":" + std::to_string(lineno) +
                            ": bad match record: " + e.what());
        }
        matches.push_back(std::move(m));
    }
    return matches;
}

void write_pairs_csv(std::ostream& out, const std::vector<WeakStrongPair>& pairs) {
    out << "weak,strong,phrase_id,forum,pattern_id\n";
    for (const auto& p : pairs)
        out << p.weak << "," << p.strong << "," << p.phrase_id << "," << p.forum << ","
            << p.pattern_id << "\n";
}

std::vector<WeakStrongPair> read_pairs_csv(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    std::vector<WeakStrongPair> pairs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1 && line.rfind("weak,", 0) == 0) continue; // header
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            std::size_t pos = line.find(',', start);
            if (pos == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, pos - start));
            start = pos + 1;
        }
        if (fields.size() != 5)
            throw DataError(path.string() + ":" + std::to_string(lineno) +
                            ": expected 5 comma-separated fields");
        pairs.push_back(WeakStrongPair{fields[0], fields[1], fields[2], fields[3], fields[4]});
    }
    return pairs;
}

void write_paths(std::ostream& out, const PathSearchResult& result) {
    for (const auto& p : result.paths) {
        json rec{{"category", p.category},
                 {"weak", p.weak},
                 {"strong", p.strong},
                 {"nodes", p.nodes},
                 {"via_same_category", p.via_same_category}};
        out << rec.dump() << "\n";
    }
}

PathSearchResult read_paths(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    PathSearchResult result;
    std::set<std::tuple<int, std::string, std::string>> unique;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json rec = parse_record(line, path, lineno);
        CategoryPath p;
        try {
            p.category = rec.at("category").get<int>();
            p.weak = rec.at("weak").get<std::string>();
            p.strong = rec.at("strong").get<std::string>();
            p.nodes = rec.at("nodes").get<std::vector<std::string>>();
            p.via_same_category = rec.value("via_same_category", false);
        } catch (const json::exception& e) {
            throw DataError(path.string() + ":" + std::to_string(lineno) +
                            ": bad path record: " + e.what());
        }
        unique.insert({p.category, p.weak, p.strong});
        result.paths.push_back(std::move(p));
    }
    result.unique_pairs.assign(unique.begin(), unique.end());
    return result;
}

void write_scales(std::ostream& out, const ScaleSet& set, const AdjectiveInventory& inventory) {
    for (const auto& s : set.scales) {
        json rec{{"category", s.category},
                 {"tiers", s.tiers},
                 {"scores", s.scores},
                 {"uncovered", s.uncovered},
                 {"rendered", render_scale(s, inventory)}};
        out << rec.dump() << "\n";
    }
    if (!set.uncovered_categories.empty()) {
        json rec{{"uncovered_categories", set.uncovered_categories}};
        out << rec.dump() << "\n";
    }
}

ScaleSet read_scales(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    ScaleSet set;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json rec = parse_record(line, path, lineno);
        if (rec.contains("uncovered_categories")) {
            set.uncovered_categories = rec["uncovered_categories"].get<std::vector<int>>();
            continue;
        }
        CategoryScale s;
        try {
            s.category = rec.at("category").get<int>();
            s.tiers = rec.at("tiers").get<std::vector<std::vector<std::string>>>();
            s.scores = rec.at("scores").get<std::map<std::string, int>>();
            s.uncovered = rec.value("uncovered", std::vector<std::string>{});
        } catch (const json::exception& e) {
            throw DataError(path.string() + ":" + std::to_string(lineno) +
                            ": bad scale record: " + e.what());
        }
        set.scales.push_back(std::move(s));
    }
    return set;
}

std::string read_text_file(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path.string());
    out << content;
}

namespace {

std::vector<double> agreement_vector(const AgreementReport& report, bool decided_only) {
    std::vector<double> xs;
    for (const auto& v : report.verdicts) {
        if (v.verdict == RelationVerdict::Verdict::Agree) {
            xs.push_back(1.0);
        } else if (v.verdict == RelationVerdict::Verdict::Disagree) {
            xs.push_back(0.0);
        } else if (!decided_only) {
            xs.push_back(0.0); // undecided counts as non-agreement in the "all" vector
        }
    }
    return xs;
}

} // namespace

EvalBundle build_eval_bundle(AgreementReport agreement,
                             std::map<std::string, std::map<std::string, std::size_t>> profiles,
                             const AdjectiveInventory& inventory,
                             const std::optional<std::string>& ttest_selector) {
    EvalBundle bundle;
    bundle.agreement = std::move(agreement);
    bundle.profiles = std::move(profiles);

    for (const auto& [name, counts] : bundle.profiles) bundle.profile_names.push_back(name);
    const auto order = inventory.lemma_order();
    for (std::size_t i = 0; i < bundle.profile_names.size(); ++i) {
        for (std::size_t j = i + 1; j < bundle.profile_names.size(); ++j) {
            const auto& a = bundle.profile_names[i];
            const auto& b = bundle.profile_names[j];
            try {
                bundle.cosine.emplace_back(a, b,
                                           cosine_similarity(bundle.profiles.at(a),
                                                             bundle.profiles.at(b), order));
            } catch (const DataError&) {
                bundle.ttest_notes.push_back("cosine " + a + "/" + b +
                                             ": undefined (zero frequency vector)");
            }
        }
    }

    auto run_ttest = [&](const std::string& label, bool decided_only) {
        auto xs = agreement_vector(bundle.agreement, decided_only);
        try {
            bundle.ttests.emplace_back(label, one_sample_t_test(xs, 0.5));
        } catch (const DataError& e) {
            bundle.ttest_notes.push_back("t-test (" + label + "): " + e.what());
        }
    };
    if (!ttest_selector || *ttest_selector == "all") run_ttest("all", false);
    if (!ttest_selector || *ttest_selector == "decided") run_ttest("decided", true);
    return bundle;
}

std::string render_eval_report(const EvalBundle& bundle) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    const auto& r = bundle.agreement;
    out << "agreement with reference inventory\n";
    out << "  relations:    " << r.total << "\n";
    out << "  agree:        " << r.agree << "\n";
    out << "  disagree:     " << r.disagree << "\n";
    out << "  inconclusive: " << r.inconclusive << "\n";
    out << std::fixed << std::setprecision(1);
    out << "  agreement (all):     " << r.agreement_all * 100.0 << "%\n";
    if (r.agreement_decided)
        out << "  agreement (decided): " << *r.agreement_decided * 100.0 << "%\n";
    else
        out << "  agreement (decided): n/a (no decided relations)\n";

    out << "per category (agree/disagree/inconclusive):\n";
    for (const auto& [cat, counts] : r.per_category)
        out << "  " << cat << ": " << counts[0] << "/" << counts[1] << "/" << counts[2] << "\n";

    out << "verdicts:\n";
    for (const auto& v : r.verdicts)
        out << "  " << v.category << " (" << v.a << ", " << v.b << "): constructed "
            << orientation_name(v.constructed) << ", reference " << orientation_name(v.reference)
            << " -> " << verdict_name(v.verdict) << "\n";

    if (!bundle.cosine.empty()) {
        out << "cosine similarity (inventory adjective frequencies):\n";
        out << std::setprecision(4);
        for (const auto& [a, b, c] : bundle.cosine)
            out << "  " << a << " / " << b << ": " << c << "\n";
    }
    if (!bundle.ttests.empty()) {
        out << "one-sample t-test against mu0 = 0.5:\n";
        out << std::setprecision(4);
        for (const auto& [label, t] : bundle.ttests)
            out << "  " << label << ": n=" << t.n << " df=" << t.df << " mean=" << t.mean
                << " t=" << t.t << " p=" << t.p_two_sided << "\n";
    }
    for (const auto& note : bundle.ttest_notes) out << "note: " << note << "\n";
    return out.str();
}

std::string eval_bundle_json(const EvalBundle& bundle) {
    const auto& r = bundle.agreement;
    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
        verdicts.push_back(json{{"category", v.category},
                                {"a", v.a},
                                {"b", v.b},
                                {"constructed", std::string(orientation_name(v.constructed))},
                                {"reference", std::string(orientation_name(v.reference))},
                                {"verdict", std::string(verdict_name(v.verdict))}});
    }
    json per_category = json::object();
    for (const auto& [cat, counts] : r.per_category)
        per_category[std::to_string(cat)] =
            json{{"agree", counts[0]}, {"disagree", counts[1]}, {"inconclusive", counts[2]}};

    json agreement{{"total", r.total},
                   {"agree", r.agree},
                   {"disagree", r.disagree},
                   {"inconclusive", r.inconclusive},
                   {"agreement_all", r.agreement_all},
                   {"per_category", per_category},
                   {"verdicts", verdicts}};
    if (r.agreement_decided) agreement["agreement_decided"] = *r.agreement_decided;

    json cosine = json::array();
    for (const auto& [a, b, c] : bundle.cosine)
        cosine.push_back(json{{"a", a}, {"b", b}, {"similarity", c}});

    json profiles = json::object();
    for (const auto& [name, counts] : bundle.profiles) {
        json obj = json::object();
        for (const auto& [lemma, n] : counts) obj[lemma] = n;
        profiles[name] = obj;
    }

    json ttests = json::object();
    for (const auto& [label, t] : bundle.ttests)
        ttests[label] = json{{"n", t.n}, {"df", t.df}, {"mean", t.mean},
                             {"t", t.t}, {"p_two_sided", t.p_two_sided}};

    json doc{{"agreement", agreement},
             {"cosine", cosine},
             {"profiles", profiles},
             {"ttests", ttests},
             {"notes", bundle.ttest_notes}};
    return doc.dump(2) + "\n";
}

} // namespace scalemine
