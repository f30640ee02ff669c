// extraction.hpp : the low-resource pipeline (single-verb filtering and
// case-heuristic frame extraction over raw text), plus the treebank-side
// single-VP sentence filter used when measuring selection bias

#ifndef SUBCAT_EXTRACTION_HPP
#define SUBCAT_EXTRACTION_HPP

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "subcat/frame.hpp"
#include "subcat/lexicon.hpp"
#include "subcat/morphology.hpp"
#include "subcat/treebank.hpp"

namespace subcat {

// Maps a noun's morphological case to an argument slot label.
struct CaseHeuristics {
    std::map<std::string, std::string> case_to_slot{
        {"NOM", "SUBJ"}, {"ACC", "OBJ"}, {"GEN", "GENARG"}};
    bool require_clear_subject = false;
};

// Finalized sentence-filter statistics; fractions are computed from the
// integer fields and rounded only at serialization.
struct FilterStats {
    std::size_t total_sentences = 0;
    std::size_t single_verb_sentences = 0;
    std::size_t unique_stems_total = 0;
    std::size_t unique_stems_single = 0;

    std::optional<double> fraction_single() const {
        if (total_sentences == 0) return std::nullopt;
        return static_cast<double>(single_verb_sentences) / static_cast<double>(total_sentences);
    }
    std::optional<double> fraction_stems() const {
        if (unique_stems_total == 0) return std::nullopt;
        return static_cast<double>(unique_stems_single) / static_cast<double>(unique_stems_total);
    }
};

// Mergeable accumulator behind FilterStats; set unions keep stem counts
// correct across shards.
struct FilterTally {
    std::size_t total = 0;
    std::size_t single = 0;
    std::set<std::string> stems_total;
    std::set<std::string> stems_single;

    void merge(const FilterTally& other);
    FilterStats finalize() const;
};

// Number of tokens judged verb candidates under the policy.
std::size_t count_verbs(std::span<const std::string> tokens, const Analyzer& analyzer,
                        VerbPolicy policy);

struct FilterResult {
    std::vector<std::string> retained;  // original lines, input order
    FilterTally tally;

    FilterStats stats() const { return tally.finalize(); }
    void merge(FilterResult&& other);
};

// Keeps exactly the sentences with one verb candidate. Stem sets collect
// every VERB-analysis stem of candidate tokens (union when ambiguous).
// Throws EmptyCorpus on empty input.
FilterResult filter_single_verb(std::span<const std::string> sentences, const Analyzer& analyzer,
                                VerbPolicy policy);

struct CaseFrame {
    std::string stem;
    Frame frame;
    bool ambiguous_case = false;    // some noun mapped to more than one slot
    bool low_confidence = false;    // clear-subject requirement unmet
    std::vector<std::string> alt_stems;  // other verbal stems of the verb token
};

// Case-heuristic frame for a sentence with exactly one verb candidate:
// every other token contributes, per NOUN analysis, the slot mapped from
// its case feature. Throws NoVerbFound when the one-verb precondition
// does not hold.
std::optional<CaseFrame> extract_case_frame(std::span<const std::string> tokens,
                                            const Analyzer& analyzer,
                                            const CaseHeuristics& heuristics, VerbPolicy policy);

// Whole raw-text pipeline: filter to single-verb sentences, extract case
// frames, accumulate a lexicon. With fractional weighting an ambiguous
// verb token spreads weight 1/n over its n distinct stems.
struct RawExtraction {
    FrameLexicon lexicon;
    FilterTally tally;
    std::vector<std::string> retained;
    std::size_t ambiguous_frames = 0;
    std::size_t low_confidence_frames = 0;

    void merge(RawExtraction&& other);
};

RawExtraction build_raw_lexicon(std::span<const std::string> sentences, const Analyzer& analyzer,
                                const CaseHeuristics& heuristics, VerbPolicy policy,
                                WeightMode mode, const std::string& source);

// Treebank-side counterpart: keeps trees with exactly one VP node. Stems
// come from treebank extraction over all trees vs. the kept ones.
struct TreeFilterResult {
    std::vector<std::size_t> kept;  // indices into the input span
    FilterTally tally;

    FilterStats stats() const { return tally.finalize(); }
    void merge(TreeFilterResult&& other);
};

TreeFilterResult filter_single_vp(std::span<const TreeNode> trees, const ExtractionConfig& config,
                                  std::size_t first_index = 0);

nlohmann::ordered_json filter_stats_json(const FilterStats& stats, int precision = 2);

}  // namespace subcat

#endif  // SUBCAT_EXTRACTION_HPP
