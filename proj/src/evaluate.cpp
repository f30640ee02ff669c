// evaluate.cpp

#include "subcat/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "subcat/errors.hpp"
#include "subcat/util.hpp"

namespace subcat {

std::string_view eval_mode_name(EvalMode mode) {
    switch (mode) {
        case EvalMode::StemCoverage: return "STEM_COVERAGE";
        case EvalMode::FrameType: return "FRAME_TYPE";
        case EvalMode::TokenWeighted: return "TOKEN_WEIGHTED";
    }
    return "FRAME_TYPE";
}

std::optional<EvalMode> parse_eval_mode(std::string_view text) {
    if (text == "stem-coverage" || text == "STEM_COVERAGE") return EvalMode::StemCoverage;
    if (text == "frame-type" || text == "FRAME_TYPE") return EvalMode::FrameType;
    if (text == "token-weighted" || text == "TOKEN_WEIGHTED") return EvalMode::TokenWeighted;
    return std::nullopt;
}

namespace {

std::optional<double> ratio(double numerator, double denominator, double other_denominator) {
    if (denominator > 0.0) return numerator / denominator;
    // this side is empty: perfect against an equally empty side, undefined
    // otherwise
    if (other_denominator == 0.0) return 1.0;
    return std::nullopt;
}

std::optional<double> harmonic_mean(const std::optional<double>& p,
                                    const std::optional<double>& r) {
    if (!p || !r) return std::nullopt;
    if (*p + *r == 0.0) return 0.0;
    return 2.0 * *p * *r / (*p + *r);
}

double pair_intersection(const FrameLexicon::FrameCounts& a, const FrameLexicon::FrameCounts& b) {
    double shared = 0.0;
    for (const auto& [frame, count] : a)
        if (b.contains(frame)) shared += 1.0;
    return shared;
}

double mass_intersection(const FrameLexicon::FrameCounts& a, const FrameLexicon::FrameCounts& b) {
    double mass = 0.0;
    for (const auto& [frame, count] : a) {
        auto it = b.find(frame);
        if (it != b.end()) mass += std::min(count, it->second);
    }
    return mass;
}

double frame_count(const FrameLexicon::FrameCounts& counts) {
    return static_cast<double>(counts.size());
}

double frame_mass(const FrameLexicon::FrameCounts& counts) {
    double sum = 0.0;
    for (const auto& [frame, count] : counts) sum += count;
    return sum;
}

std::map<std::string, double> stem_marginal(const FrameLexicon& lexicon) {
    std::map<std::string, double> marginal;
    double grand = lexicon.grand_total();
    for (const auto& [stem, frames] : lexicon.entries()) marginal[stem] = lexicon.total(stem) / grand;
    return marginal;
}

std::string format_cell(const std::optional<double>& value, int precision) {
    if (!value) return "-";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", precision, *value);
    return buf;
}

}  // namespace

EvalReport precision_recall(const FrameLexicon& candidate, const FrameLexicon& gold,
                            EvalMode mode) {
    EvalReport report;
    report.mode = mode;

    std::set<std::string> stems;
    for (const auto& [stem, frames] : candidate.entries()) stems.insert(stem);
    for (const auto& [stem, frames] : gold.entries()) stems.insert(stem);

    static const FrameLexicon::FrameCounts kNoFrames;
    for (const std::string& stem : stems) {
        auto cand_it = candidate.entries().find(stem);
        auto gold_it = gold.entries().find(stem);
        const FrameLexicon::FrameCounts& cand_frames =
            cand_it == candidate.entries().end() ? kNoFrames : cand_it->second;
        const FrameLexicon::FrameCounts& gold_frames =
            gold_it == gold.entries().end() ? kNoFrames : gold_it->second;

        double tp = 0.0;
        double cand_size = 0.0;
        double gold_size = 0.0;
        switch (mode) {
            case EvalMode::StemCoverage:
                cand_size = cand_frames.empty() ? 0.0 : 1.0;
                gold_size = gold_frames.empty() ? 0.0 : 1.0;
                tp = (cand_size > 0.0 && gold_size > 0.0) ? 1.0 : 0.0;
                break;
            case EvalMode::FrameType:
                cand_size = frame_count(cand_frames);
                gold_size = frame_count(gold_frames);
                tp = pair_intersection(cand_frames, gold_frames);
                break;
            case EvalMode::TokenWeighted:
                cand_size = frame_mass(cand_frames);
                gold_size = frame_mass(gold_frames);
                tp = mass_intersection(cand_frames, gold_frames);
                break;
        }
        report.true_positives += tp;
        report.candidate_size += cand_size;
        report.gold_size += gold_size;

        StemPR stem_pr;
        if (cand_size > 0.0) stem_pr.precision = tp / cand_size;
        if (gold_size > 0.0) stem_pr.recall = tp / gold_size;
        report.per_stem[stem] = stem_pr;
    }

    report.precision = ratio(report.true_positives, report.candidate_size, report.gold_size);
    report.recall = ratio(report.true_positives, report.gold_size, report.candidate_size);
    report.f1 = harmonic_mean(report.precision, report.recall);
    return report;
}

double top_k_overlap(const FrameLexicon& a, const FrameLexicon& b, std::size_t k) {
    std::set<std::string> top_a;
    for (const auto& [stem, total] : a.top_k_stems(k)) top_a.insert(stem);
    std::set<std::string> top_b;
    for (const auto& [stem, total] : b.top_k_stems(k)) top_b.insert(stem);
    std::size_t denom = std::max(top_a.size(), top_b.size());
    if (denom == 0) return 0.0;
    std::size_t shared = 0;
    for (const std::string& stem : top_a)
        if (top_b.contains(stem)) ++shared;
    return static_cast<double>(shared) / static_cast<double>(denom);
}

DivergenceReport stem_distribution_divergence(const FrameLexicon& a, const FrameLexicon& b,
                                              const std::vector<std::size_t>& ks) {
    if (a.empty()) throw EmptyLexicon("first lexicon has no stems");
    if (b.empty()) throw EmptyLexicon("second lexicon has no stems");

    std::map<std::string, double> pa = stem_marginal(a);
    std::map<std::string, double> pb = stem_marginal(b);

    std::set<std::string> support;
    for (const auto& [stem, p] : pa) support.insert(stem);
    for (const auto& [stem, p] : pb) support.insert(stem);

    double js = 0.0;
    std::size_t shared = 0;
    for (const std::string& stem : support) {
        auto ia = pa.find(stem);
        auto ib = pb.find(stem);
        double p = ia == pa.end() ? 0.0 : ia->second;
        double q = ib == pb.end() ? 0.0 : ib->second;
        if (p > 0.0 && q > 0.0) ++shared;
        double mid = 0.5 * (p + q);
        if (p > 0.0) js += 0.5 * p * std::log2(p / mid);
        if (q > 0.0) js += 0.5 * q * std::log2(q / mid);
    }

    DivergenceReport report;
    report.js_divergence = std::clamp(js, 0.0, 1.0);
    report.support_overlap =
        support.empty() ? 0.0 : static_cast<double>(shared) / static_cast<double>(support.size());
    for (std::size_t k : ks) report.top_k_overlap[k] = top_k_overlap(a, b, k);
    return report;
}

std::map<Frame, FrameShift> usage_shift(const std::string& stem, const FrameLexicon& full,
                                        const FrameLexicon& filtered) {
    bool in_full = full.contains(stem);
    bool in_filtered = filtered.contains(stem);
    if (!in_full && !in_filtered)
        throw UnknownStemBoth("stem '" + stem + "' is in neither lexicon");

    std::map<Frame, double> full_freq;
    if (in_full) full_freq = full.relative_frequencies(stem);
    std::map<Frame, double> filtered_freq;
    if (in_filtered) filtered_freq = filtered.relative_frequencies(stem);

    std::map<Frame, FrameShift> shifts;
    for (const auto& [frame, freq] : full_freq) shifts[frame].full_freq = freq;
    for (const auto& [frame, freq] : filtered_freq) shifts[frame].filtered_freq = freq;
    for (auto& [frame, shift] : shifts) shift.delta = shift.full_freq - shift.filtered_freq;
    return shifts;
}

nlohmann::ordered_json eval_json(const EvalReport& report, int precision) {
    nlohmann::ordered_json obj;
    obj["mode"] = eval_mode_name(report.mode);
    put_fraction(obj, "precision", report.precision, precision);
    put_fraction(obj, "recall", report.recall, precision);
    put_fraction(obj, "f1", report.f1, precision);
    obj["true_positives"] = report.true_positives;
    obj["candidate_size"] = report.candidate_size;
    obj["gold_size"] = report.gold_size;
    nlohmann::ordered_json per_stem = nlohmann::ordered_json::object();
    for (const auto& [stem, pr] : report.per_stem) {
        nlohmann::ordered_json cell;
        cell["precision"] = pr.precision ? nlohmann::ordered_json(*pr.precision)
                                         : nlohmann::ordered_json(nullptr);
        cell["recall"] =
            pr.recall ? nlohmann::ordered_json(*pr.recall) : nlohmann::ordered_json(nullptr);
        per_stem[stem] = cell;
    }
    obj["per_stem"] = per_stem;
    return obj;
}

nlohmann::ordered_json divergence_json(const DivergenceReport& report, int precision) {
    nlohmann::ordered_json obj;
    put_fraction(obj, "js_divergence", report.js_divergence, precision);
    put_fraction(obj, "support_overlap", report.support_overlap, precision);
    nlohmann::ordered_json overlaps = nlohmann::ordered_json::object();
    for (const auto& [k, overlap] : report.top_k_overlap)
        overlaps[std::to_string(k)] = overlap;
    obj["top_k_overlap"] = overlaps;
    return obj;
}

nlohmann::ordered_json usage_shift_json(const std::string& stem,
                                        const std::map<Frame, FrameShift>& shifts) {
    nlohmann::ordered_json obj;
    obj["stem"] = stem;
    nlohmann::ordered_json frames = nlohmann::ordered_json::object();
    for (const auto& [frame, shift] : shifts) {
        nlohmann::ordered_json cell;
        cell["full"] = shift.full_freq;
        cell["filtered"] = shift.filtered_freq;
        cell["delta"] = shift.delta;
        frames[frame.canonical()] = cell;
    }
    obj["frames"] = frames;
    return obj;
}

void write_eval_table(std::ostream& out, const EvalReport& report, const FrameLexicon& gold,
                      int precision) {
    std::vector<std::pair<std::string, double>> order;
    order.reserve(report.per_stem.size());
    for (const auto& [stem, pr] : report.per_stem) order.emplace_back(stem, gold.total(stem));
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });

    out << "stem\tgold_total\tprecision\trecall\n";
    for (const auto& [stem, gold_total] : order) {
        const StemPR& pr = report.per_stem.at(stem);
        char total_buf[32];
        std::snprintf(total_buf, sizeof total_buf, "%g", gold_total);
        out << stem << '\t' << total_buf << '\t' << format_cell(pr.precision, precision) << '\t'
            << format_cell(pr.recall, precision) << '\n';
    }
}

}  // namespace subcat
