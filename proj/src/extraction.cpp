// extraction.cpp

#include "subcat/extraction.hpp"

#include <algorithm>

#include "subcat/errors.hpp"
#include "subcat/util.hpp"

namespace subcat {

void FilterTally::merge(const FilterTally& other) {
    total += other.total;
    single += other.single;
    stems_total.insert(other.stems_total.begin(), other.stems_total.end());
    stems_single.insert(other.stems_single.begin(), other.stems_single.end());
}

FilterStats FilterTally::finalize() const {
    FilterStats stats;
    stats.total_sentences = total;
    stats.single_verb_sentences = single;
    stats.unique_stems_total = stems_total.size();
    stats.unique_stems_single = stems_single.size();
    return stats;
}

std::size_t count_verbs(std::span<const std::string> tokens, const Analyzer& analyzer,
                        VerbPolicy policy) {
    std::size_t verbs = 0;
    for (const std::string& token : tokens)
        if (is_verb_candidate(analyzer.analyze(token), policy)) ++verbs;
    return verbs;
}

namespace {

void collect_verb_stems(std::span<const MorphAnalysis> analyses, std::set<std::string>& stems) {
    for (const MorphAnalysis& analysis : analyses)
        if (analysis.pos == Pos::Verb) stems.insert(analysis.stem);
}

FilterResult filter_sentences(std::span<const std::string> sentences, const Analyzer& analyzer,
                              VerbPolicy policy) {
    FilterResult result;
    for (const std::string& sentence : sentences) {
        ++result.tally.total;
        std::vector<std::string> tokens = split_tokens(sentence);
        std::size_t verbs = 0;
        std::set<std::string> single_verb_stems;
        for (const std::string& token : tokens) {
            std::vector<MorphAnalysis> analyses = analyzer.analyze(token);
            if (!is_verb_candidate(analyses, policy)) continue;
            ++verbs;
            collect_verb_stems(analyses, result.tally.stems_total);
            if (verbs == 1) collect_verb_stems(analyses, single_verb_stems);
        }
        if (verbs == 1) {
            ++result.tally.single;
            result.tally.stems_single.insert(single_verb_stems.begin(),
                                             single_verb_stems.end());
            result.retained.push_back(sentence);
        }
    }
    return result;
}

}  // namespace

void FilterResult::merge(FilterResult&& other) {
    retained.insert(retained.end(), std::make_move_iterator(other.retained.begin()),
                    std::make_move_iterator(other.retained.end()));
    tally.merge(other.tally);
}

FilterResult filter_single_verb(std::span<const std::string> sentences, const Analyzer& analyzer,
                                VerbPolicy policy) {
    if (sentences.empty()) throw EmptyCorpus("no sentences to filter");
    return filter_sentences(sentences, analyzer, policy);
}

std::optional<CaseFrame> extract_case_frame(std::span<const std::string> tokens,
                                            const Analyzer& analyzer,
                                            const CaseHeuristics& heuristics, VerbPolicy policy) {
    std::vector<std::vector<MorphAnalysis>> per_token;
    per_token.reserve(tokens.size());
    for (const std::string& token : tokens) per_token.push_back(analyzer.analyze(token));

    std::size_t verb_index = tokens.size();
    std::size_t verbs = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (is_verb_candidate(per_token[i], policy)) {
            ++verbs;
            if (verbs == 1) verb_index = i;
        }
    }
    if (verbs != 1)
        throw NoVerbFound("expected exactly one verb token, found " + std::to_string(verbs));

    CaseFrame out;
    for (const MorphAnalysis& analysis : per_token[verb_index]) {
        if (analysis.pos != Pos::Verb) continue;
        if (out.stem.empty()) {
            out.stem = analysis.stem;  // leftmost lexicon entry wins
        } else if (analysis.stem != out.stem &&
                   std::find(out.alt_stems.begin(), out.alt_stems.end(), analysis.stem) ==
                       out.alt_stems.end()) {
            out.alt_stems.push_back(analysis.stem);
        }
    }

    std::vector<std::string> slots;
    bool saw_nominative_noun = false;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i == verb_index) continue;
        std::set<std::string> token_slots;
        for (const MorphAnalysis& analysis : per_token[i]) {
            if (analysis.pos != Pos::Noun) continue;
            std::optional<std::string> case_value = analysis.feature(kCaseFeature);
            if (!case_value) continue;
            if (*case_value == "NOM") saw_nominative_noun = true;
            auto slot = heuristics.case_to_slot.find(*case_value);
            if (slot != heuristics.case_to_slot.end()) token_slots.insert(slot->second);
        }
        if (token_slots.size() > 1) out.ambiguous_case = true;
        slots.insert(slots.end(), token_slots.begin(), token_slots.end());
    }
    out.frame = Frame(std::move(slots));
    out.low_confidence = heuristics.require_clear_subject && !saw_nominative_noun;
    return out;
}

void RawExtraction::merge(RawExtraction&& other) {
    lexicon.merge_in(other.lexicon);
    tally.merge(other.tally);
    retained.insert(retained.end(), std::make_move_iterator(other.retained.begin()),
                    std::make_move_iterator(other.retained.end()));
    ambiguous_frames += other.ambiguous_frames;
    low_confidence_frames += other.low_confidence_frames;
}

RawExtraction build_raw_lexicon(std::span<const std::string> sentences, const Analyzer& analyzer,
                                const CaseHeuristics& heuristics, VerbPolicy policy,
                                WeightMode mode, const std::string& source) {
    if (sentences.empty()) throw EmptyCorpus("no sentences to extract from");

    RawExtraction result;
    result.lexicon = FrameLexicon(mode, Provenance::RawCase, source);
    FilterResult filtered = filter_sentences(sentences, analyzer, policy);
    result.tally = std::move(filtered.tally);
    result.retained = std::move(filtered.retained);

    for (const std::string& sentence : result.retained) {
        std::vector<std::string> tokens = split_tokens(sentence);
        std::optional<CaseFrame> frame = extract_case_frame(tokens, analyzer, heuristics, policy);
        if (!frame) continue;
        if (frame->ambiguous_case) ++result.ambiguous_frames;
        if (frame->low_confidence) ++result.low_confidence_frames;
        if (mode == WeightMode::Fractional && !frame->alt_stems.empty()) {
            double weight = 1.0 / static_cast<double>(1 + frame->alt_stems.size());
            result.lexicon.add(frame->stem, frame->frame, weight);
            for (const std::string& alt : frame->alt_stems)
                result.lexicon.add(alt, frame->frame, weight);
        } else {
            result.lexicon.add(frame->stem, frame->frame, 1.0);
        }
    }
    return result;
}

void TreeFilterResult::merge(TreeFilterResult&& other) {
    kept.insert(kept.end(), other.kept.begin(), other.kept.end());
    tally.merge(other.tally);
}

TreeFilterResult filter_single_vp(std::span<const TreeNode> trees, const ExtractionConfig& config,
                                  std::size_t first_index) {
    TreeFilterResult result;
    result.tally.total = trees.size();
    for (std::size_t t = 0; t < trees.size(); ++t) {
        std::vector<VpHit> hits = find_verb_phrases(trees[t], config);
        bool single = hits.size() == 1;
        if (single) {
            ++result.tally.single;
            result.kept.push_back(first_index + t);
        }
        for (const VpHit& hit : hits) {
            std::optional<VerbInstance> instance = extract_verb_instance(*hit.node, config);
            if (!instance) continue;
            result.tally.stems_total.insert(instance->stem);
            if (single) result.tally.stems_single.insert(instance->stem);
        }
    }
    return result;
}

nlohmann::ordered_json filter_stats_json(const FilterStats& stats, int precision) {
    nlohmann::ordered_json obj;
    obj["total_sentences"] = stats.total_sentences;
    obj["single_verb_sentences"] = stats.single_verb_sentences;
    put_fraction(obj, "fraction_single", stats.fraction_single(), precision);
    obj["unique_stems_total"] = stats.unique_stems_total;
    obj["unique_stems_single"] = stats.unique_stems_single;
    put_fraction(obj, "fraction_stems", stats.fraction_stems(), precision);
    return obj;
}

}  // namespace subcat
