// cli.cpp : subcommand wiring for the subcat tool

#include "subcat/cli.hpp"

#include <future>
#include <iostream>
#include <memory>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "subcat/errors.hpp"
#include "subcat/evaluate.hpp"
#include "subcat/extraction.hpp"
#include "subcat/lexicon.hpp"
#include "subcat/morphology.hpp"
#include "subcat/treebank.hpp"
#include "subcat/tree.hpp"
#include "subcat/util.hpp"

namespace subcat {

namespace {

// All tunables in one place so a run without flags or a config file is
// fully specified.
struct RunConfig {
    // shared
    int precision = 2;

    // treebank extraction
    std::string tb_in;
    std::string tb_out;
    std::string tb_instances;
    std::string tb_census;
    std::string tb_filter_stats;
    bool tb_single_vp_only = false;
    std::vector<std::string> verb_tags{"IV", "PV"};
    std::vector<std::string> vp_prefixes{"VP"};
    std::vector<std::string> ignore_tags{"PUNC", "PUNCT", ".",  ",",  ":",    ";",
                                         "?",    "!",     "``", "''", "-LRB-", "-RRB-"};
    bool strip_suffixes = false;
    bool multiset_frames = false;
    std::string stem_source = "lemma";
    std::string source_id;

    // raw extraction / filtering
    std::string raw_in;
    std::string raw_analyzer;
    std::string raw_out;
    std::string raw_retained;
    std::string raw_filter_stats;
    std::string policy = "any";
    std::string weighting = "integer";
    std::string case_map = "NOM=SUBJ,ACC=OBJ,GEN=GENARG";
    bool require_clear_subject = false;
    bool split_sentences = false;

    // ambiguity
    std::string amb_in;
    std::string amb_analyzer;
    std::string amb_out;
    std::string amb_hist;
    std::string unknown = "zero";

    // filter
    std::string flt_in;
    std::string flt_analyzer;
    std::string flt_in_lexicon;
    std::string flt_out;
    std::string flt_stats;
    double noise_rate = 0.02;
    double noise_alpha = 0.05;

    // compare
    std::string cmp_candidate;
    std::string cmp_gold;
    std::string cmp_mode = "frame-type";
    std::string cmp_out;
    std::string cmp_table;
    std::string cmp_divergence;
    std::size_t top_k = 10;
    std::string shift_stem;
    std::string shift_out;

    // report
    std::string rep_census;
    std::string rep_filter_stats;
    std::string rep_lexicon;
    std::string rep_eval;
    std::string rep_divergence;
    std::string rep_out;
    std::size_t rep_top_k = 10;
};

ExtractionConfig make_extraction_config(const RunConfig& cfg) {
    ExtractionConfig config;
    config.verb_tag_substrings = cfg.verb_tags;
    config.vp_label_prefixes = cfg.vp_prefixes;
    config.ignored_sibling_labels = cfg.ignore_tags;
    config.strip_label_suffixes = cfg.strip_suffixes;
    config.multiset_frames = cfg.multiset_frames;
    config.stem_source =
        cfg.stem_source == "surface" ? StemSource::SurfaceForm : StemSource::TreebankLemma;
    return config;
}

CaseHeuristics make_case_heuristics(const RunConfig& cfg) {
    CaseHeuristics heuristics;
    heuristics.case_to_slot.clear();
    for (const std::string& pair : split_on(cfg.case_map, ',')) {
        if (pair.empty()) continue;
        std::size_t eq = pair.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= pair.size())
            throw CLI::ValidationError("--case-map", "expected CASE=SLOT pairs, got '" + pair + "'");
        heuristics.case_to_slot[pair.substr(0, eq)] = pair.substr(eq + 1);
    }
    if (heuristics.case_to_slot.empty())
        throw CLI::ValidationError("--case-map", "no case mappings given");
    heuristics.require_clear_subject = cfg.require_clear_subject;
    return heuristics;
}

VerbPolicy policy_from(const std::string& name) {
    return parse_verb_policy(name).value_or(VerbPolicy::Any);
}

std::string default_source(const std::string& in_path) {
    return std::filesystem::path(in_path).filename().string();
}

std::vector<std::string> read_sentences(const std::string& path, bool split_sentences) {
    if (split_sentences) return split_sentences_naive(read_file(path));
    return read_lines(path);
}

// Data errors from parsers carry line/column but not the file; prefix it.
template <typename Fn>
auto with_file_context(const std::string& path, Fn&& fn) {
    try {
        return fn();
    } catch (const IoError&) {
        throw;  // already names the file
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

// Contiguous chunks, merged in chunk order, so any worker count
// reproduces the sequential result.
template <typename Result, typename Fn>
Result sharded_reduce(std::size_t item_count, Fn&& process_chunk) {
    std::size_t workers = std::min(env_worker_count(), std::max<std::size_t>(item_count, 1));
    if (workers <= 1) return process_chunk(std::size_t{0}, item_count);

    std::size_t chunk = (item_count + workers - 1) / workers;
    std::vector<std::future<Result>> parts;
    for (std::size_t begin = 0; begin < item_count; begin += chunk) {
        std::size_t end = std::min(item_count, begin + chunk);
        parts.push_back(std::async(std::launch::async,
                                   [&process_chunk, begin, end] { return process_chunk(begin, end); }));
    }
    Result merged = parts.front().get();
    for (std::size_t i = 1; i < parts.size(); ++i) merged.merge(parts[i].get());
    return merged;
}

nlohmann::json read_json_file(const std::string& path) {
    std::string text = read_file(path);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError("cannot parse JSON file " + path + ": " + e.what());
    }
}

int run_extract_treebank(const RunConfig& cfg) {
    std::vector<TreeNode> trees =
        with_file_context(cfg.tb_in, [&] { return read_treebank_file(cfg.tb_in); });
    ExtractionConfig config = make_extraction_config(cfg);
    std::span<const TreeNode> tree_span(trees);

    ExtractResult result = sharded_reduce<ExtractResult>(
        trees.size(),
        [&](std::size_t begin, std::size_t end) {
            return extract_frames(tree_span.subspan(begin, end - begin), config, begin);
        });

    std::vector<const VerbInstance*> selected;
    std::optional<FilterStats> filter_stats;
    if (cfg.tb_single_vp_only) {
        TreeFilterResult filtered = sharded_reduce<TreeFilterResult>(
            trees.size(),
            [&](std::size_t begin, std::size_t end) {
                return filter_single_vp(tree_span.subspan(begin, end - begin), config, begin);
            });
        filter_stats = filtered.stats();
        std::set<std::size_t> kept(filtered.kept.begin(), filtered.kept.end());
        for (const VerbInstance& instance : result.instances)
            if (kept.contains(instance.sentence_id)) selected.push_back(&instance);
    } else {
        for (const VerbInstance& instance : result.instances) selected.push_back(&instance);
    }

    std::string source = cfg.source_id.empty() ? default_source(cfg.tb_in) : cfg.source_id;
    FrameLexicon lexicon(WeightMode::Integer, Provenance::Treebank, source);
    for (const VerbInstance* instance : selected)
        lexicon.add(instance->stem, instance->frame, 1.0);

    // write everything to temp files first, then commit as a group
    std::vector<std::unique_ptr<AtomicWriter>> writers;
    auto open = [&writers](const std::string& path) -> std::ofstream& {
        writers.push_back(std::make_unique<AtomicWriter>(path));
        return writers.back()->stream();
    };

    write_lexicon_tsv(open(cfg.tb_out), lexicon);
    if (!cfg.tb_instances.empty()) {
        std::ofstream& out = open(cfg.tb_instances);
        std::vector<VerbInstance> rows;
        rows.reserve(selected.size());
        for (const VerbInstance* instance : selected) rows.push_back(*instance);
        write_instances_tsv(out, rows);
    }
    if (!cfg.tb_census.empty()) {
        writers.push_back(std::make_unique<AtomicWriter>(cfg.tb_census));
        writers.back()->stream() << census_json(result.census, cfg.precision).dump(2) << '\n';
    }
    if (!cfg.tb_filter_stats.empty() && filter_stats) {
        writers.push_back(std::make_unique<AtomicWriter>(cfg.tb_filter_stats));
        writers.back()->stream() << filter_stats_json(*filter_stats, cfg.precision).dump(2)
                                 << '\n';
    }
    for (auto& writer : writers) writer->commit();
    return 0;
}

int run_extract_raw(const RunConfig& cfg) {
    std::vector<std::string> lines = read_sentences(cfg.raw_in, cfg.split_sentences);
    if (lines.empty()) throw EmptyCorpus("corpus " + cfg.raw_in + " has no sentences");
    LexiconAnalyzer analyzer = with_file_context(
        cfg.raw_analyzer, [&] { return load_analyzer_lexicon_file(cfg.raw_analyzer); });
    CaseHeuristics heuristics = make_case_heuristics(cfg);
    VerbPolicy policy = policy_from(cfg.policy);
    WeightMode mode = parse_weight_mode(cfg.weighting).value_or(WeightMode::Integer);
    std::string source = cfg.source_id.empty() ? default_source(cfg.raw_in) : cfg.source_id;

    std::span<const std::string> line_span(lines);
    RawExtraction result = sharded_reduce<RawExtraction>(
        lines.size(),
        [&](std::size_t begin, std::size_t end) {
            return build_raw_lexicon(line_span.subspan(begin, end - begin), analyzer, heuristics,
                                     policy, mode, source);
        });

    std::vector<std::unique_ptr<AtomicWriter>> writers;
    writers.push_back(std::make_unique<AtomicWriter>(cfg.raw_out));
    write_lexicon_tsv(writers.back()->stream(), result.lexicon);
    if (!cfg.raw_filter_stats.empty()) {
        nlohmann::ordered_json obj = filter_stats_json(result.tally.finalize(), cfg.precision);
        obj["ambiguous_case_frames"] = result.ambiguous_frames;
        obj["low_confidence_frames"] = result.low_confidence_frames;
        writers.push_back(std::make_unique<AtomicWriter>(cfg.raw_filter_stats));
        writers.back()->stream() << obj.dump(2) << '\n';
    }
    if (!cfg.raw_retained.empty()) {
        writers.push_back(std::make_unique<AtomicWriter>(cfg.raw_retained));
        for (const std::string& line : result.retained) writers.back()->stream() << line << '\n';
    }
    for (auto& writer : writers) writer->commit();
    return 0;
}

int run_ambiguity_stats(const RunConfig& cfg) {
    std::vector<std::string> lines = read_sentences(cfg.amb_in, cfg.split_sentences);
    LexiconAnalyzer analyzer = with_file_context(
        cfg.amb_analyzer, [&] { return load_analyzer_lexicon_file(cfg.amb_analyzer); });
    UnknownPolicy policy = UnknownPolicy::CountAsZero;
    if (cfg.unknown == "one") policy = UnknownPolicy::CountAsOne;
    if (cfg.unknown == "skip") policy = UnknownPolicy::Skip;

    std::span<const std::string> line_span(lines);
    struct Part {
        AmbiguityTally tally;
        void merge(Part&& other) { tally.merge(other.tally); }
    };
    Part part = sharded_reduce<Part>(lines.size(), [&](std::size_t begin, std::size_t end) {
        Part p;
        for (std::size_t i = begin; i < end; ++i)
            for (const std::string& token : split_tokens(line_span[i]))
                p.tally.add_token(token, analyzer, policy);
        return p;
    });
    AmbiguityReport report = part.tally.finalize();

    std::vector<std::unique_ptr<AtomicWriter>> writers;
    writers.push_back(std::make_unique<AtomicWriter>(cfg.amb_out));
    writers.back()->stream() << ambiguity_json(report, cfg.precision).dump(2) << '\n';
    if (!cfg.amb_hist.empty()) {
        writers.push_back(std::make_unique<AtomicWriter>(cfg.amb_hist));
        write_histogram_text(writers.back()->stream(), report);
    }
    for (auto& writer : writers) writer->commit();
    return 0;
}

int run_filter(const RunConfig& cfg) {
    if (!cfg.flt_in_lexicon.empty()) {
        // noise mode: binomial filter over an existing lexicon
        FrameLexicon lexicon = with_file_context(
            cfg.flt_in_lexicon, [&] { return read_lexicon_tsv_file(cfg.flt_in_lexicon); });
        FrameLexicon filtered = binomial_filter(lexicon, cfg.noise_rate, cfg.noise_alpha);
        if (cfg.flt_out.empty()) throw Error("--out is required when filtering a lexicon");
        write_lexicon_tsv_file(cfg.flt_out, filtered);
        return 0;
    }

    // sentence mode: keep single-verb sentences
    std::vector<std::string> lines = read_sentences(cfg.flt_in, cfg.split_sentences);
    if (lines.empty()) throw EmptyCorpus("corpus " + cfg.flt_in + " has no sentences");
    LexiconAnalyzer analyzer = with_file_context(
        cfg.flt_analyzer, [&] { return load_analyzer_lexicon_file(cfg.flt_analyzer); });
    VerbPolicy policy = policy_from(cfg.policy);

    std::span<const std::string> line_span(lines);
    FilterResult result = sharded_reduce<FilterResult>(
        lines.size(),
        [&](std::size_t begin, std::size_t end) {
            // chunks are never empty, so the EmptyCorpus guard cannot fire
            return filter_single_verb(line_span.subspan(begin, end - begin), analyzer, policy);
        });

    std::vector<std::unique_ptr<AtomicWriter>> writers;
    if (!cfg.flt_out.empty()) {
        writers.push_back(std::make_unique<AtomicWriter>(cfg.flt_out));
        for (const std::string& line : result.retained) writers.back()->stream() << line << '\n';
    }
    if (!cfg.flt_stats.empty()) {
        writers.push_back(std::make_unique<AtomicWriter>(cfg.flt_stats));
        writers.back()->stream() << filter_stats_json(result.stats(), cfg.precision).dump(2)
                                 << '\n';
    }
    for (auto& writer : writers) writer->commit();
    return 0;
}

int run_compare(const RunConfig& cfg) {
    FrameLexicon candidate = with_file_context(
        cfg.cmp_candidate, [&] { return read_lexicon_tsv_file(cfg.cmp_candidate); });
    FrameLexicon gold =
        with_file_context(cfg.cmp_gold, [&] { return read_lexicon_tsv_file(cfg.cmp_gold); });
    EvalMode mode = parse_eval_mode(cfg.cmp_mode).value_or(EvalMode::FrameType);

    EvalReport report = precision_recall(candidate, gold, mode);

    std::vector<std::unique_ptr<AtomicWriter>> writers;
    writers.push_back(std::make_unique<AtomicWriter>(cfg.cmp_out));
    writers.back()->stream() << eval_json(report, cfg.precision).dump(2) << '\n';
    if (!cfg.cmp_table.empty()) {
        writers.push_back(std::make_unique<AtomicWriter>(cfg.cmp_table));
        write_eval_table(writers.back()->stream(), report, gold, cfg.precision);
    }
    if (!cfg.cmp_divergence.empty()) {
        DivergenceReport divergence =
            stem_distribution_divergence(candidate, gold, {cfg.top_k});
        writers.push_back(std::make_unique<AtomicWriter>(cfg.cmp_divergence));
        writers.back()->stream() << divergence_json(divergence, cfg.precision).dump(2) << '\n';
    }
    if (!cfg.shift_stem.empty()) {
        // shift measured from the gold (full) lexicon to the candidate
        std::map<Frame, FrameShift> shifts = usage_shift(cfg.shift_stem, gold, candidate);
        writers.push_back(std::make_unique<AtomicWriter>(cfg.shift_out));
        writers.back()->stream() << usage_shift_json(cfg.shift_stem, shifts).dump(2) << '\n';
    }
    for (auto& writer : writers) writer->commit();
    return 0;
}

void markdown_escape(std::string& s) {
    // table cells only need the bar escaped
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    s = std::move(out);
}

std::string cell(const nlohmann::json& value) {
    if (value.is_null()) return "-";
    if (value.is_string()) {
        std::string s = value.get<std::string>();
        markdown_escape(s);
        return s;
    }
    return value.dump();
}

int run_report(const RunConfig& cfg) {
    AtomicWriter writer(cfg.rep_out);
    std::ofstream& out = writer.stream();
    out << "# Verb subcategorization report\n";

    if (!cfg.rep_census.empty()) {
        nlohmann::json census = read_json_file(cfg.rep_census);
        out << "\n## Treebank extraction census\n\n";
        out << "| measure | value |\n|---|---|\n";
        out << "| sentences | " << cell(census.value("sentences", nlohmann::json())) << " |\n";
        out << "| verb phrases | " << cell(census.value("verb_phrases", nlohmann::json()))
            << " |\n";
        out << "| verb phrases with a findable verb | "
            << cell(census.value("verb_phrases_with_verb", nlohmann::json())) << " |\n";
        out << "| coverage | " << cell(census.value("coverage", nlohmann::json())) << " |\n";
        out << "| unique verb stems | " << cell(census.value("unique_stems", nlohmann::json()))
            << " |\n";
    }

    if (!cfg.rep_filter_stats.empty()) {
        nlohmann::json stats = read_json_file(cfg.rep_filter_stats);
        out << "\n## Single-verb sentence filtering\n\n";
        out << "| measure | count | fraction |\n|---|---|---|\n";
        out << "| sentences | " << cell(stats.value("total_sentences", nlohmann::json()))
            << " | 1.0 |\n";
        out << "| sentences with one verb | "
            << cell(stats.value("single_verb_sentences", nlohmann::json())) << " | "
            << cell(stats.value("fraction_single", nlohmann::json())) << " |\n";
        out << "| unique verb stems | " << cell(stats.value("unique_stems_total", nlohmann::json()))
            << " | 1.0 |\n";
        out << "| unique stems in one-verb sentences | "
            << cell(stats.value("unique_stems_single", nlohmann::json())) << " | "
            << cell(stats.value("fraction_stems", nlohmann::json())) << " |\n";
    }

    if (!cfg.rep_lexicon.empty()) {
        FrameLexicon lexicon = read_lexicon_tsv_file(cfg.rep_lexicon);
        std::string origin = lexicon.source().empty() ? "lexicon" : lexicon.source();
        markdown_escape(origin);
        out << "\n## Most common verb stems (" << origin << ")\n\n";
        out << "| stem | observations |\n|---|---|\n";
        char buf[32];
        for (const auto& [stem, total] : lexicon.top_k_stems(cfg.rep_top_k)) {
            std::string escaped = stem;
            markdown_escape(escaped);
            std::snprintf(buf, sizeof buf, "%g", total);
            out << "| " << escaped << " | " << buf << " |\n";
        }
    }

    if (!cfg.rep_eval.empty()) {
        nlohmann::json eval = read_json_file(cfg.rep_eval);
        out << "\n## Evaluation against the gold lexicon\n\n";
        out << "| mode | precision | recall | f1 |\n|---|---|---|---|\n";
        out << "| " << cell(eval.value("mode", nlohmann::json())) << " | "
            << cell(eval.value("precision", nlohmann::json())) << " | "
            << cell(eval.value("recall", nlohmann::json())) << " | "
            << cell(eval.value("f1", nlohmann::json())) << " |\n";
    }

    if (!cfg.rep_divergence.empty()) {
        nlohmann::json divergence = read_json_file(cfg.rep_divergence);
        out << "\n## Stem distribution shift\n\n";
        out << "| measure | value |\n|---|---|\n";
        out << "| Jensen-Shannon divergence (bits) | "
            << cell(divergence.value("js_divergence", nlohmann::json())) << " |\n";
        out << "| support overlap | " << cell(divergence.value("support_overlap", nlohmann::json()))
            << " |\n";
        if (divergence.contains("top_k_overlap"))
            for (const auto& [k, overlap] : divergence.at("top_k_overlap").items())
                out << "| top-" << k << " stem overlap | " << cell(overlap) << " |\n";
    }

    writer.commit();
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

int run(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"Verb subcategorization frame acquisition toolkit", "subcat"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a key=value file with [subcommand] sections");

    CLI::App* tb = app.add_subcommand("extract-treebank",
                                      "extract verb frames from a bracketed treebank");
    tb->add_option("--in", cfg.tb_in, "bracketed treebank file")->required();
    tb->add_option("--out", cfg.tb_out, "frame lexicon TSV to write")->required();
    tb->add_option("--instances", cfg.tb_instances, "verb instance TSV to write");
    tb->add_option("--census", cfg.tb_census, "extraction census JSON to write");
    CLI::Option* tb_single = tb->add_flag(
        "--single-vp-only", cfg.tb_single_vp_only,
        "build the lexicon only from sentences with exactly one verb phrase");
    tb->add_option("--filter-stats", cfg.tb_filter_stats,
                   "single-VP filter statistics JSON (needs --single-vp-only)")
        ->needs(tb_single);
    tb->add_option("--verb-tags", cfg.verb_tags, "substrings marking verbal tags")
        ->delimiter(',');
    tb->add_option("--vp-prefixes", cfg.vp_prefixes, "label prefixes marking verb phrases")
        ->delimiter(',');
    tb->add_option("--ignore-tags", cfg.ignore_tags, "sibling labels excluded from frames")
        ->delimiter(',');
    tb->add_flag("--strip-suffixes", cfg.strip_suffixes,
                 "strip functional suffixes (NP-OBJ -> NP) from frame labels");
    tb->add_flag("--multiset", cfg.multiset_frames, "keep duplicate labels in frames");
    tb->add_option("--stem-source", cfg.stem_source, "verb stem source")
        ->check(CLI::IsMember({"lemma", "surface"}));
    tb->add_option("--source", cfg.source_id, "source id recorded in the lexicon");
    tb->add_option("--precision", cfg.precision, "decimals for reported fractions");

    CLI::App* raw = app.add_subcommand(
        "extract-raw", "extract case-heuristic frames from single-verb sentences of a raw corpus");
    raw->add_option("--in", cfg.raw_in, "corpus file, one sentence per line")->required();
    raw->add_option("--lexicon", cfg.raw_analyzer, "analyzer lexicon TSV")->required();
    raw->add_option("--out", cfg.raw_out, "frame lexicon TSV to write")->required();
    raw->add_option("--retained", cfg.raw_retained, "file for the retained sentences");
    raw->add_option("--filter-stats", cfg.raw_filter_stats, "filter statistics JSON to write");
    raw->add_option("--policy", cfg.policy, "verb candidate policy")
        ->check(CLI::IsMember({"any", "all", "majority"}));
    raw->add_option("--weighting", cfg.weighting, "observation weighting")
        ->check(CLI::IsMember({"integer", "fractional"}));
    raw->add_option("--case-map", cfg.case_map, "case-to-slot mapping, CASE=SLOT pairs");
    raw->add_flag("--require-clear-subject", cfg.require_clear_subject,
                  "flag frames lacking a nominative noun as low confidence");
    raw->add_flag("--split-sentences", cfg.split_sentences,
                  "segment the input on ./?/! and the Arabic full stop");
    raw->add_option("--source", cfg.source_id, "source id recorded in the lexicon");
    raw->add_option("--precision", cfg.precision, "decimals for reported fractions");

    CLI::App* amb = app.add_subcommand("ambiguity-stats",
                                       "per-token morphological ambiguity statistics");
    amb->add_option("--in", cfg.amb_in, "corpus file, one sentence per line")->required();
    amb->add_option("--lexicon", cfg.amb_analyzer, "analyzer lexicon TSV")->required();
    amb->add_option("--out", cfg.amb_out, "report JSON to write")->required();
    amb->add_option("--hist", cfg.amb_hist, "plain-text histogram to write");
    amb->add_option("--unknown", cfg.unknown, "treatment of unknown tokens")
        ->check(CLI::IsMember({"zero", "one", "skip"}));
    amb->add_flag("--split-sentences", cfg.split_sentences,
                  "segment the input on ./?/! and the Arabic full stop");
    amb->add_option("--precision", cfg.precision, "decimals for reported fractions");

    CLI::App* flt = app.add_subcommand(
        "filter", "keep single-verb sentences, or noise-filter a lexicon with --in-lexicon");
    CLI::Option* flt_in = flt->add_option("--in", cfg.flt_in, "corpus file to filter");
    CLI::Option* flt_lex =
        flt->add_option("--lexicon", cfg.flt_analyzer, "analyzer lexicon TSV (sentence mode)");
    CLI::Option* flt_inlex =
        flt->add_option("--in-lexicon", cfg.flt_in_lexicon, "frame lexicon to noise-filter");
    flt_inlex->excludes(flt_in);
    flt_lex->needs(flt_in);
    flt->add_option("--out", cfg.flt_out, "retained sentences / filtered lexicon");
    flt->add_option("--stats", cfg.flt_stats, "filter statistics JSON (sentence mode)");
    flt->add_option("--policy", cfg.policy, "verb candidate policy")
        ->check(CLI::IsMember({"any", "all", "majority"}));
    flt->add_flag("--split-sentences", cfg.split_sentences,
                  "segment the input on ./?/! and the Arabic full stop");
    flt->add_option("--eps", cfg.noise_rate, "assumed noise rate (lexicon mode)");
    flt->add_option("--alpha", cfg.noise_alpha, "significance level (lexicon mode)");
    flt->add_option("--precision", cfg.precision, "decimals for reported fractions");

    CLI::App* cmp = app.add_subcommand("compare", "score a candidate lexicon against a gold one");
    cmp->add_option("--candidate", cfg.cmp_candidate, "candidate lexicon TSV")->required();
    cmp->add_option("--gold", cfg.cmp_gold, "gold lexicon TSV")->required();
    cmp->add_option("--mode", cfg.cmp_mode, "evaluation mode")
        ->check(CLI::IsMember({"stem-coverage", "frame-type", "token-weighted"}));
    cmp->add_option("--out", cfg.cmp_out, "evaluation report JSON to write")->required();
    cmp->add_option("--table", cfg.cmp_table, "per-stem table to write");
    cmp->add_option("--divergence", cfg.cmp_divergence, "stem distribution divergence JSON");
    cmp->add_option("--top-k", cfg.top_k, "k for top-k stem overlap");
    CLI::Option* shift_stem_opt =
        cmp->add_option("--shift-stem", cfg.shift_stem, "stem for a usage-shift report");
    cmp->add_option("--shift-out", cfg.shift_out, "usage-shift JSON to write")
        ->needs(shift_stem_opt);
    shift_stem_opt->needs(cmp->get_option("--shift-out"));
    cmp->add_option("--precision", cfg.precision, "decimals for reported fractions");

    CLI::App* rep = app.add_subcommand("report", "render collected outputs as one markdown page");
    rep->add_option("--census", cfg.rep_census, "census JSON from extract-treebank");
    rep->add_option("--filter-stats", cfg.rep_filter_stats, "filter statistics JSON");
    rep->add_option("--lexicon", cfg.rep_lexicon, "frame lexicon TSV for the top-stem table");
    rep->add_option("--top-k", cfg.rep_top_k, "stems to list");
    rep->add_option("--eval", cfg.rep_eval, "evaluation JSON from compare");
    rep->add_option("--divergence", cfg.rep_divergence, "divergence JSON from compare");
    rep->add_option("--out", cfg.rep_out, "markdown file to write")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (tb->parsed()) return run_extract_treebank(cfg);
        if (raw->parsed()) return run_extract_raw(cfg);
        if (amb->parsed()) return run_ambiguity_stats(cfg);
        if (flt->parsed()) {
            if (cfg.flt_in.empty() && cfg.flt_in_lexicon.empty()) {
                std::cerr << "filter: give either --in (sentence mode) or --in-lexicon "
                             "(noise mode)\n";
                return 1;
            }
            if (!cfg.flt_in.empty() && cfg.flt_analyzer.empty()) {
                std::cerr << "filter: sentence mode needs --lexicon\n";
                return 1;
            }
            return run_filter(cfg);
        }
        if (cmp->parsed()) return run_compare(cfg);
        if (rep->parsed()) return run_report(cfg);
        std::cerr << "no subcommand given\n";
        return 1;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.get_name() << ": " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace subcat
