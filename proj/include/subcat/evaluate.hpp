// evaluate.hpp : scoring a candidate lexicon against a gold lexicon and
// quantifying corpus-selection bias

#ifndef SUBCAT_EVALUATE_HPP
#define SUBCAT_EVALUATE_HPP

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "subcat/lexicon.hpp"

namespace subcat {

enum class EvalMode { StemCoverage, FrameType, TokenWeighted };

std::string_view eval_mode_name(EvalMode mode);
std::optional<EvalMode> parse_eval_mode(std::string_view text);

struct StemPR {
    std::optional<double> precision;
    std::optional<double> recall;
};

// Undefined ratios (an empty side against a non-empty one) are reported
// absent, never silently 0; both sides empty scores 1.
struct EvalReport {
    EvalMode mode = EvalMode::FrameType;
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f1;
    double true_positives = 0.0;
    double candidate_size = 0.0;
    double gold_size = 0.0;
    std::map<std::string, StemPR> per_stem;
};

// FRAME_TYPE scores (stem, frame) pairs, STEM_COVERAGE scores stems,
// TOKEN_WEIGHTED scores Σ min(candidate, gold) count mass normalized by
// each side's grand total.
EvalReport precision_recall(const FrameLexicon& candidate, const FrameLexicon& gold,
                            EvalMode mode);

struct DivergenceReport {
    double js_divergence = 0.0;   // base 2, in [0, 1]
    double support_overlap = 0.0; // shared stems / union stems
    std::map<std::size_t, double> top_k_overlap;
};

// Jensen-Shannon divergence between the stem-marginal distributions;
// zero-probability terms contribute nothing. Throws EmptyLexicon.
DivergenceReport stem_distribution_divergence(const FrameLexicon& a, const FrameLexicon& b,
                                              const std::vector<std::size_t>& ks = {10});

double top_k_overlap(const FrameLexicon& a, const FrameLexicon& b, std::size_t k);

struct FrameShift {
    double full_freq = 0.0;
    double filtered_freq = 0.0;
    double delta = 0.0;  // full_freq - filtered_freq
};

// Per-frame relative-frequency deltas for one stem across two lexica;
// frames absent from a side have frequency 0 there. Throws
// UnknownStemBoth when the stem is in neither lexicon.
std::map<Frame, FrameShift> usage_shift(const std::string& stem, const FrameLexicon& full,
                                        const FrameLexicon& filtered);

nlohmann::ordered_json eval_json(const EvalReport& report, int precision = 2);
nlohmann::ordered_json divergence_json(const DivergenceReport& report, int precision = 2);
nlohmann::ordered_json usage_shift_json(const std::string& stem,
                                        const std::map<Frame, FrameShift>& shifts);

// Plain-text table (stem, precision, recall) sorted by gold frequency
// descending; stems missing from gold trail in candidate order.
void write_eval_table(std::ostream& out, const EvalReport& report, const FrameLexicon& gold,
                      int precision = 2);

}  // namespace subcat

#endif  // SUBCAT_EVALUATE_HPP
