// scalemine - mine adjective intensity scales from forum text corpora.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scalemine/corpus.hpp"
#include "scalemine/errors.hpp"
#include "scalemine/eval.hpp"
#include "scalemine/graph.hpp"
#include "scalemine/io.hpp"
#include "scalemine/pairs.hpp"
#include "scalemine/patterns.hpp"
#include "scalemine/pipeline.hpp"
#include "scalemine/scales.hpp"
#include "scalemine/tagger.hpp"

#ifndef SCALEMINE_DATA_DIR
#define SCALEMINE_DATA_DIR "data"
#endif

namespace {

using namespace scalemine;

struct CommonOpts {
    std::string inventory = std::string(SCALEMINE_DATA_DIR) + "/mpq_inventory.txt";
    std::string patterns = std::string(SCALEMINE_DATA_DIR) + "/patterns_table3.txt";
    std::string lexicon = std::string(SCALEMINE_DATA_DIR) + "/tag_lexicon.txt";
    std::string out_dir = ".";
    std::size_t window = 10;
    std::size_t max_depth = 10;
    std::size_t skip_run = 3;
    std::string format = "records";
    std::string out; // per-command output file; stdout if empty
};

std::ostream& output(const CommonOpts& opts, std::ofstream& file) {
    if (opts.out.empty()) return std::cout;
    file.open(opts.out, std::ios::binary);
    if (!file) throw DataError("cannot write file: " + opts.out);
    return file;
}

std::vector<TaggedPost> tag_corpus_files(const std::vector<std::string>& files,
                                         const CommonOpts& opts,
                                         const AdjectiveInventory& inventory) {
    Tagger tagger = Tagger::load(opts.lexicon);
    CorpusFormat format = corpus_format_from_name(opts.format);
    std::vector<TaggedPost> tagged;
    for (const auto& file : files) {
        auto report = load_corpus(file, format);
        for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
        for (const auto& post : report.posts)
            tagged.push_back(TaggedPost{
                post.id, post.forum,
                tag_pipeline(tagger, tokenize(post.text), inventory, post.id)});
    }
    return tagged;
}

int cmd_stats(const std::string& corpus, const CommonOpts& opts, bool use_inventory) {
    Tagger tagger = Tagger::load(opts.lexicon);
    CorpusFormat format = corpus_format_from_name(opts.format);
    auto report = load_corpus(corpus, format);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
    if (report.posts.empty()) throw DataError("corpus has no posts: " + corpus);

    std::optional<AdjectiveInventory> inventory;
    if (use_inventory) inventory = AdjectiveInventory::load(opts.inventory);

    std::vector<std::vector<TaggedToken>> tagged;
    for (const auto& post : report.posts) {
        auto toks = apply_ing_override(tagger.tag(tokenize(post.text), post.id));
        if (inventory) toks = apply_inventory_override(std::move(toks), *inventory);
        tagged.push_back(std::move(toks));
    }
    auto stats = compute_stats(report.posts, tagged);

    std::ofstream file;
    std::ostream& out = output(opts, file);
    out << render_stats_report(std::filesystem::path(corpus).stem().string(), stats);
    out << "  dropped empty posts:   " << report.dropped_empty << "\n";
    out << "  malformed lines:       " << report.malformed << "\n";
    return 0;
}

int cmd_tag(const std::string& corpus, const CommonOpts& opts, bool pretagged) {
    auto inventory = AdjectiveInventory::load(opts.inventory);
    std::vector<TaggedPost> tagged;
    if (pretagged) {
        // External tagger output: keep its tags, apply only the two overrides.
        for (auto& post : read_tagged_corpus(corpus)) {
            post.tokens = apply_inventory_override(apply_ing_override(std::move(post.tokens)),
                                                   inventory);
            tagged.push_back(std::move(post));
        }
    } else {
        tagged = tag_corpus_files({corpus}, opts, inventory);
    }
    std::ofstream file;
    write_tagged_corpus(output(opts, file), tagged);
    return 0;
}

int cmd_match(const std::string& tagged_path, const CommonOpts& opts,
              const std::string& exclusions) {
    auto inventory = AdjectiveInventory::load(opts.inventory);
    auto patterns = load_patterns(opts.patterns);
    auto tagged = read_tagged_corpus(tagged_path);
    auto matches = scan(tagged, patterns, inventory, ScanOptions{opts.window, opts.skip_run});
    std::cerr << "matches: " << matches.size() << "\n";
    if (!exclusions.empty()) {
        auto report = apply_exclusions(std::move(matches), exclusions);
        matches = std::move(report.kept);
        for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
        for (const auto& [reason, n] : report.removed_by_reason)
            std::cerr << "excluded " << reason << ": " << n << "\n";
        std::cerr << "kept: " << matches.size() << "\n";
    }
    std::ofstream file;
    write_matches(output(opts, file), matches);
    return 0;
}

int cmd_pairs(const std::string& matches_path, const CommonOpts& opts) {
    auto inventory = AdjectiveInventory::load(opts.inventory); // validates the lemma universe
    auto matches = read_matches(matches_path);
    std::vector<WeakStrongPair> pairs;
    for (const auto& m : matches) {
        for (const auto& lemma : m.left_lemmas)
            if (!inventory.is_lemma(lemma))
                throw DataError("match " + m.phrase_id + ": unknown lemma '" + lemma + "'");
        for (const auto& lemma : m.right_lemmas)
            if (!inventory.is_lemma(lemma))
                throw DataError("match " + m.phrase_id + ": unknown lemma '" + lemma + "'");
        for (auto& p : extract_pairs(m)) pairs.push_back(std::move(p));
    }
    std::ofstream file;
    write_pairs_csv(output(opts, file), pairs);
    std::cerr << render_pair_stats(pair_statistics(pairs));
    return 0;
}

int cmd_graph(const std::string& pairs_path, const CommonOpts& opts, const std::string& dot,
              const std::string& paths_out) {
    auto inventory = AdjectiveInventory::load(opts.inventory);
    auto pairs = read_pairs_csv(pairs_path);
    auto graph = resolve_directions(build_graph(pairs));
    std::ofstream file;
    output(opts, file) << render_diagnostics(diagnose(graph));
    if (!dot.empty()) {
        write_text_file(dot, to_dot_multigraph(graph));
        std::filesystem::path resolved = dot;
        resolved.replace_filename(resolved.stem().string() + "_resolved.dot");
        write_text_file(resolved, to_dot_resolved(graph));
    }
    if (!paths_out.empty()) {
        auto result = find_category_paths(graph, inventory, opts.max_depth);
        std::ofstream pf(paths_out, std::ios::binary);
        if (!pf) throw DataError("cannot write file: " + paths_out);
        write_paths(pf, result);
        std::cerr << "paths: " << result.paths.size()
                  << ", unique endpoint pairs: " << result.unique_pairs.size() << "\n";
    }
    return 0;
}

int cmd_scales(const std::string& paths_path, const CommonOpts& opts) {
    auto inventory = AdjectiveInventory::load(opts.inventory);
    auto paths = read_paths(paths_path);
    auto scales = build_all_scales(paths.unique_pairs, inventory);
    std::ofstream file;
    write_scales(output(opts, file), scales, inventory);
    std::cerr << render_scales_report(scales, inventory);
    return 0;
}

int cmd_eval(const std::string& scales_path, const CommonOpts& opts,
             const std::vector<std::string>& freq_files, const std::string& ttest) {
    auto inventory = AdjectiveInventory::load(opts.inventory);
    auto scales = read_scales(scales_path);
    auto agreement = compare_to_reference(scales.scales, inventory);

    std::map<std::string, std::map<std::string, std::size_t>> profiles;
    if (!freq_files.empty()) {
        auto tagged = tag_corpus_files(freq_files, opts, inventory);
        profiles = frequency_profile(tagged, inventory);
    }
    std::optional<std::string> selector;
    if (!ttest.empty()) selector = ttest;
    auto bundle = build_eval_bundle(std::move(agreement), std::move(profiles), inventory, selector);

    std::ofstream file;
    std::ostream& out = output(opts, file);
    out << render_eval_report(bundle);
    if (!opts.out.empty()) {
        std::filesystem::path json_path = opts.out;
        json_path.replace_extension(".json");
        write_text_file(json_path, eval_bundle_json(bundle));
    }
    return 0;
}

int cmd_run(const std::vector<std::string>& corpora, const CommonOpts& opts,
            const std::string& exclusions, const std::string& ttest) {
    PipelineConfig config;
    for (const auto& c : corpora) config.corpus_paths.emplace_back(c);
    config.format = corpus_format_from_name(opts.format);
    config.inventory_path = opts.inventory;
    config.patterns_path = opts.patterns;
    config.lexicon_path = opts.lexicon;
    if (!exclusions.empty()) config.exclusions_path = exclusions;
    config.window = opts.window;
    config.max_skip_run = opts.skip_run;
    config.max_depth = opts.max_depth;
    config.out_dir = opts.out_dir;
    if (!ttest.empty()) config.ttest_vector = ttest;

    auto result = run_pipeline(config);
    std::cout << "posts: " << result.posts << "\n";
    std::cout << "matches kept: " << result.matches << " (excluded " << result.excluded << ")\n";
    std::cout << "pairs: " << result.pairs << "\n";
    std::cout << "paths: " << result.paths << " (unique endpoint pairs " << result.unique_pairs
              << ")\n";
    std::cout << "scales: " << result.scales << "\n";
    std::cout << "agreement: " << result.agreement.agree << "/" << result.agreement.total
              << " agree, " << result.agreement.disagree << " disagree, "
              << result.agreement.inconclusive << " inconclusive\n";
    for (const auto& artifact : result.artifacts) std::cout << "wrote " << artifact.string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"scalemine: adjective intensity scales from pattern-mined forum text"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string corpus, exclusions, dot, paths_out, ttest;
    std::vector<std::string> corpora, freq_files;
    bool pretagged = false;
    bool no_inventory = false;

    auto add_common = [&](CLI::App* cmd, bool needs_patterns = false) {
        cmd->add_option("--inventory", opts.inventory, "adjective inventory file")
            ->capture_default_str();
        cmd->add_option("--lexicon", opts.lexicon, "tagger lexicon file")->capture_default_str();
        if (needs_patterns)
            cmd->add_option("--patterns", opts.patterns, "pattern file")->capture_default_str();
        cmd->add_option("-o,--out", opts.out, "output file (stdout if omitted)");
    };

    auto* stats = app.add_subcommand("stats", "corpus statistics report");
    stats->add_option("corpus", corpus, "corpus file")->required();
    stats->add_option("--format", opts.format, "plain | records")->capture_default_str();
    stats->add_flag("--no-inventory", no_inventory, "skip the inventory tag override");
    add_common(stats);

    auto* tag = app.add_subcommand("tag", "tokenize and tag a corpus");
    tag->add_option("corpus", corpus, "corpus file")->required();
    tag->add_option("--format", opts.format, "plain | records")->capture_default_str();
    tag->add_flag("--pretagged", pretagged, "input is word/TAG text from an external tagger");
    add_common(tag);

    auto* match = app.add_subcommand("match", "scan a tagged corpus for pattern instances");
    match->add_option("tagged", corpus, "tagged corpus file")->required();
    match->add_option("--window", opts.window, "scan window in tokens")->capture_default_str();
    match->add_option("--skip-run", opts.skip_run, "max consecutive skippable tokens")
        ->capture_default_str();
    match->add_option("--exclusions", exclusions, "manual exclusion list");
    add_common(match, true);

    auto* pairs = app.add_subcommand("pairs", "extract weak-strong pairs from matches");
    pairs->add_option("matches", corpus, "matches record-lines file")->required();
    add_common(pairs);

    auto* graph = app.add_subcommand("graph", "build and diagnose the relation graph");
    graph->add_option("pairs", corpus, "pairs csv file")->required();
    graph->add_option("--dot", dot, "write the multigraph DOT here (resolved graph alongside)");
    graph->add_option("--paths", paths_out, "write same-category paths here");
    graph->add_option("--max-depth", opts.max_depth, "path search depth limit")
        ->capture_default_str();
    add_common(graph);

    auto* scales = app.add_subcommand("scales", "score category scales from paths");
    scales->add_option("paths", corpus, "paths record-lines file")->required();
    add_common(scales);

    auto* eval = app.add_subcommand("eval", "compare scales to the reference inventory");
    eval->add_option("scales", corpus, "scales record-lines file")->required();
    eval->add_option("--freq", freq_files, "corpora for frequency comparison")->expected(-1);
    eval->add_option("--ttest", ttest, "agreement vector: all | decided");
    eval->add_option("--format", opts.format, "plain | records")->capture_default_str();
    add_common(eval);

    auto* run = app.add_subcommand("run", "full pipeline: stats through eval");
    run->add_option("corpus", corpora, "corpus files, one per forum")->required()->expected(-1);
    run->add_option("--format", opts.format, "plain | records")->capture_default_str();
    run->add_option("--out-dir", opts.out_dir, "artifact directory")->capture_default_str();
    run->add_option("--window", opts.window, "scan window in tokens")->capture_default_str();
    run->add_option("--skip-run", opts.skip_run, "max consecutive skippable tokens")
        ->capture_default_str();
    run->add_option("--max-depth", opts.max_depth, "path search depth limit")
        ->capture_default_str();
    run->add_option("--exclusions", exclusions, "manual exclusion list");
    run->add_option("--ttest", ttest, "agreement vector: all | decided (default: both)");
    run->add_option("--inventory", opts.inventory, "adjective inventory file")
        ->capture_default_str();
    run->add_option("--patterns", opts.patterns, "pattern file")->capture_default_str();
    run->add_option("--lexicon", opts.lexicon, "tagger lexicon file")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e); // CLI11 prints usage; nonzero for errors
    }

    try {
        if (stats->parsed()) return cmd_stats(corpus, opts, !no_inventory);
        if (tag->parsed()) return cmd_tag(corpus, opts, pretagged);
        if (match->parsed()) return cmd_match(corpus, opts, exclusions);
        if (pairs->parsed()) return cmd_pairs(corpus, opts);
        if (graph->parsed()) return cmd_graph(corpus, opts, dot, paths_out);
        if (scales->parsed()) return cmd_scales(corpus, opts);
        if (eval->parsed()) return cmd_eval(corpus, opts, freq_files, ttest);
        if (run->parsed()) return cmd_run(corpora, opts, exclusions, ttest);
    } catch (const scalemine::DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const scalemine::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
