#include "scalemine/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "scalemine/errors.hpp"
#include "scalemine/graph.hpp"
#include "scalemine/io.hpp"
#include "scalemine/pairs.hpp"
#include "scalemine/patterns.hpp"
#include "scalemine/scales.hpp"

namespace scalemine {

void PipelineConfig::validate() const {
    if (corpus_paths.empty()) throw DataError("no corpus files given");
    if (window < 3) throw DataError("window must be at least 3 tokens");
    if (max_depth == 0) throw DataError("max-depth must be at least 1");
    if (inventory_path.empty()) throw DataError("missing --inventory path");
    if (patterns_path.empty()) throw DataError("missing --patterns path");
    if (lexicon_path.empty()) throw DataError("missing --lexicon path");
    if (out_dir.empty()) throw DataError("missing --out-dir path");
    if (ttest_vector && *ttest_vector != "all" && *ttest_vector != "decided")
        throw DataError("--ttest must be 'all' or 'decided'");
}

namespace {

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const DataError& e) {
        throw DataError(std::string("stage ") + name + ": " + e.what());
    }
}

} // namespace

PipelineResult run_pipeline(const PipelineConfig& config) {
    config.validate();
    std::filesystem::create_directories(config.out_dir);

    const auto inventory = stage("setup", [&] { return AdjectiveInventory::load(config.inventory_path); });
    const auto patterns = stage("setup", [&] { return load_patterns(config.patterns_path); });
    const auto tagger = stage("setup", [&] { return Tagger::load(config.lexicon_path); });

    PipelineResult result;
    auto emit = [&](const std::filesystem::path& name, const std::string& content) {
        auto path = config.out_dir / name;
        write_text_file(path, content);
        result.artifacts.push_back(path);
    };

    struct CorpusData {
        std::string name;
        LoadReport load;
        std::vector<std::vector<TaggedToken>> tagged;
    };
    std::vector<CorpusData> corpora;
    std::vector<TaggedPost> all_tagged;
    stage("stats", [&] {
        for (const auto& path : config.corpus_paths) {
            CorpusData data;
            data.name = path.stem().string();
            data.load = load_corpus(path, config.format, config.text_hook);
            for (const auto& post : data.load.posts) {
                auto tagged = tag_pipeline(tagger, tokenize(post.text), inventory, post.id);
                all_tagged.push_back(TaggedPost{post.id, post.forum, tagged});
                data.tagged.push_back(std::move(tagged));
            }
            result.posts += data.load.posts.size();
            corpora.push_back(std::move(data));
        }
        std::ostringstream report;
        for (const auto& data : corpora) {
            report << render_stats_report(data.name, compute_stats(data.load.posts, data.tagged));
            report << "  dropped empty posts:   " << data.load.dropped_empty << "\n";
            report << "  malformed lines:       " << data.load.malformed << "\n\n";
        }
        emit("01_stats.txt", report.str());
        return 0;
    });

    stage("tag", [&] {
        std::ostringstream out;
        write_tagged_corpus(out, all_tagged);
        emit("02_tagged.jsonl", out.str());
        return 0;
    });

    std::vector<MatchedPhrase> matches;
    stage("match", [&] {
        ScanOptions options{config.window, config.max_skip_run};
        matches = scan(all_tagged, patterns, inventory, options);
        if (config.exclusions_path) {
            auto report = apply_exclusions(std::move(matches), *config.exclusions_path);
            matches = std::move(report.kept);
            result.excluded = report.removed_total;
        }
        result.matches = matches.size();
        std::ostringstream out;
        write_matches(out, matches);
        emit("03_matches.jsonl", out.str());
        return 0;
    });

    std::vector<WeakStrongPair> pairs;
    stage("pairs", [&] {
        for (const auto& m : matches)
            for (auto& p : extract_pairs(m)) pairs.push_back(std::move(p));
        result.pairs = pairs.size();
        std::ostringstream out;
        write_pairs_csv(out, pairs);
        emit("04_pairs.csv", out.str());
        return 0;
    });

    RelationGraph graph;
    stage("graph", [&] {
        graph = resolve_directions(build_graph(pairs));
        emit("05_graph.dot", to_dot_multigraph(graph));
        emit("05_graph_resolved.dot", to_dot_resolved(graph));
        emit("05_diagnostics.txt", render_diagnostics(diagnose(graph)));
        return 0;
    });

    PathSearchResult paths;
    stage("paths", [&] {
        paths = find_category_paths(graph, inventory, config.max_depth);
        result.paths = paths.paths.size();
        result.unique_pairs = paths.unique_pairs.size();
        std::ostringstream out;
        write_paths(out, paths);
        emit("06_paths.jsonl", out.str());
        return 0;
    });

    ScaleSet scales;
    stage("scales", [&] {
        scales = build_all_scales(paths.unique_pairs, inventory);
        result.scales = scales.scales.size();
        std::ostringstream out;
        write_scales(out, scales, inventory);
        emit("07_scales.jsonl", out.str());
        emit("07_scales.txt", render_scales_report(scales, inventory));
        return 0;
    });

    stage("eval", [&] {
        result.agreement = compare_to_reference(scales.scales, inventory);
        auto bundle = build_eval_bundle(result.agreement, frequency_profile(all_tagged, inventory),
                                        inventory, config.ttest_vector);
        emit("08_eval.txt", render_eval_report(bundle));
        emit("08_eval.json", eval_bundle_json(bundle));
        return 0;
    });

    return result;
}

} // namespace scalemine
