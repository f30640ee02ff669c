// morphology.cpp

#include "subcat/morphology.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "subcat/errors.hpp"
#include "subcat/util.hpp"

namespace subcat {

std::optional<Pos> parse_pos(std::string_view text) {
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "VERB") return Pos::Verb;
    if (upper == "NOUN") return Pos::Noun;
    if (upper == "ADJ") return Pos::Adj;
    if (upper == "OTHER") return Pos::Other;
    return std::nullopt;
}

std::string_view pos_name(Pos pos) {
    switch (pos) {
        case Pos::Verb: return "VERB";
        case Pos::Noun: return "NOUN";
        case Pos::Adj: return "ADJ";
        case Pos::Other: return "OTHER";
    }
    return "OTHER";
}

std::vector<MorphAnalysis> LexiconAnalyzer::analyze(const std::string& surface) const {
    auto it = entries_.find(surface);
    if (it == entries_.end()) return {};
    return it->second;
}

void LexiconAnalyzer::add(MorphAnalysis analysis) {
    entries_[analysis.surface].push_back(std::move(analysis));
    ++analyses_;
}

namespace {

MorphAnalysis parse_lexicon_row(const std::string& line, std::size_t line_no) {
    std::vector<std::string> fields = split_on(line, '\t');
    if (fields.size() < 3 || fields.size() > 4)
        throw MalformedRow("expected 3 or 4 tab-separated fields, got " +
                               std::to_string(fields.size()),
                           line_no);
    if (fields[0].empty()) throw MalformedRow("empty surface form", line_no);
    if (fields[1].empty()) throw MalformedRow("empty stem", line_no);

    std::optional<Pos> pos = parse_pos(fields[2]);
    if (!pos) throw UnknownPos("unknown part of speech '" + fields[2] + "'", line_no);

    MorphAnalysis analysis;
    analysis.surface = fields[0];
    analysis.stem = fields[1];
    analysis.pos = *pos;

    if (fields.size() == 4 && !fields[3].empty()) {
        for (const std::string& pair : split_on(fields[3], ';')) {
            if (pair.empty()) continue;  // tolerate a trailing ';'
            std::size_t eq = pair.find('=');
            if (eq == std::string::npos || eq == 0)
                throw MalformedRow("feature '" + pair + "' is not key=value", line_no);
            std::string key = pair.substr(0, eq);
            if (analysis.features.contains(key))
                throw MalformedRow("duplicate feature key '" + key + "'", line_no);
            analysis.features.emplace(std::move(key), pair.substr(eq + 1));
        }
    }
    return analysis;
}

}  // namespace

LexiconAnalyzer load_analyzer_lexicon(std::istream& in) {
    LexiconAnalyzer analyzer;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        analyzer.add(parse_lexicon_row(line, line_no));
    }
    if (analyzer.analysis_count() == 0) throw EmptyLexicon("analyzer lexicon has no rows");
    return analyzer;
}

LexiconAnalyzer load_analyzer_lexicon(const std::string& text) {
    std::istringstream in(text);
    return load_analyzer_lexicon(in);
}

LexiconAnalyzer load_analyzer_lexicon_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open analyzer lexicon: " + path.string());
    return load_analyzer_lexicon(in);
}

void AmbiguityTally::add(const std::string& surface, std::size_t analysis_count) {
    ++histogram[analysis_count];
    if (analysis_count > max || histogram.size() == 1) {
        if (analysis_count > max) max_tokens.clear();
        max = std::max(max, analysis_count);
    }
    if (analysis_count == max) max_tokens.insert(surface);
}

void AmbiguityTally::add_token(const std::string& surface, const Analyzer& analyzer,
                               UnknownPolicy policy) {
    std::size_t count = analyzer.analyze(surface).size();
    if (count == 0) {
        switch (policy) {
            case UnknownPolicy::CountAsZero: break;
            case UnknownPolicy::CountAsOne: count = 1; break;
            case UnknownPolicy::Skip: return;
        }
    }
    add(surface, count);
}

void AmbiguityTally::merge(const AmbiguityTally& other) {
    for (const auto& [count, tokens] : other.histogram) histogram[count] += tokens;
    if (other.max > max) {
        max = other.max;
        max_tokens = other.max_tokens;
    } else if (other.max == max) {
        max_tokens.insert(other.max_tokens.begin(), other.max_tokens.end());
    }
}

AmbiguityReport AmbiguityTally::finalize() const {
    std::size_t total = 0;
    for (const auto& [count, tokens] : histogram) total += tokens;
    if (total == 0) throw EmptyCorpus("no tokens to report on");

    double mean = 0.0;
    for (const auto& [count, tokens] : histogram)
        mean += static_cast<double>(count) * static_cast<double>(tokens);
    mean /= static_cast<double>(total);

    double variance = 0.0;
    for (const auto& [count, tokens] : histogram) {
        double diff = static_cast<double>(count) - mean;
        variance += static_cast<double>(tokens) * diff * diff;
    }
    variance /= static_cast<double>(total);

    AmbiguityReport report;
    report.token_count = total;
    report.mean = mean;
    report.std_dev = std::sqrt(variance);
    report.max = histogram.rbegin()->first;
    report.max_tokens = max_tokens;
    report.histogram = histogram;
    return report;
}

AmbiguityReport ambiguity_stats(std::span<const std::string> tokens, const Analyzer& analyzer,
                                UnknownPolicy policy) {
    AmbiguityTally tally;
    for (const std::string& token : tokens) tally.add_token(token, analyzer, policy);
    return tally.finalize();
}

std::optional<VerbPolicy> parse_verb_policy(std::string_view text) {
    if (text == "any" || text == "ANY") return VerbPolicy::Any;
    if (text == "all" || text == "ALL") return VerbPolicy::All;
    if (text == "majority" || text == "MAJORITY") return VerbPolicy::Majority;
    return std::nullopt;
}

bool is_verb_candidate(std::span<const MorphAnalysis> analyses, VerbPolicy policy) {
    if (analyses.empty()) return false;
    std::size_t verbs = 0;
    for (const MorphAnalysis& analysis : analyses)
        if (analysis.pos == Pos::Verb) ++verbs;
    switch (policy) {
        case VerbPolicy::Any: return verbs >= 1;
        case VerbPolicy::All: return verbs == analyses.size();
        case VerbPolicy::Majority: return 2 * verbs > analyses.size();
    }
    return false;
}

nlohmann::ordered_json ambiguity_json(const AmbiguityReport& report, int precision) {
    nlohmann::ordered_json obj;
    obj["token_count"] = report.token_count;
    put_fraction(obj, "mean", report.mean, precision);
    put_fraction(obj, "std_dev", report.std_dev, precision);
    obj["max"] = report.max;
    obj["max_tokens"] = report.max_tokens;
    nlohmann::ordered_json hist = nlohmann::ordered_json::object();
    for (const auto& [count, tokens] : report.histogram) hist[std::to_string(count)] = tokens;
    obj["histogram"] = hist;
    return obj;
}

void write_histogram_text(std::ostream& out, const AmbiguityReport& report) {
    std::size_t widest = 1;
    for (const auto& [count, tokens] : report.histogram) widest = std::max(widest, tokens);
    out << "analyses\ttokens\n";
    for (const auto& [count, tokens] : report.histogram) {
        std::size_t bar = (tokens * 40 + widest - 1) / widest;
        out << count << '\t' << tokens << '\t';
        for (std::size_t i = 0; i < bar; ++i) out << '#';
        out << '\n';
    }
}

}  // namespace subcat
