// lexicon.cpp

#include "subcat/lexicon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "subcat/errors.hpp"
#include "subcat/util.hpp"

namespace subcat {

namespace {

bool is_whole(double value) { return std::nearbyint(value) == value; }

// Counts print as integers in integer mode and as shortest-round-trip
// decimals otherwise, so files re-read to the same doubles.
std::string format_count(double value, WeightMode mode) {
    if (mode == WeightMode::Integer || is_whole(value)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", value);
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_rel_freq(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

}  // namespace

std::string_view weight_mode_name(WeightMode mode) {
    return mode == WeightMode::Integer ? "INTEGER" : "FRACTIONAL";
}

std::string_view provenance_name(Provenance provenance) {
    return provenance == Provenance::Treebank ? "TREEBANK" : "RAW_CASE";
}

std::optional<WeightMode> parse_weight_mode(std::string_view text) {
    if (text == "INTEGER" || text == "integer") return WeightMode::Integer;
    if (text == "FRACTIONAL" || text == "fractional") return WeightMode::Fractional;
    return std::nullopt;
}

std::optional<Provenance> parse_provenance(std::string_view text) {
    if (text == "TREEBANK" || text == "treebank") return Provenance::Treebank;
    if (text == "RAW_CASE" || text == "raw_case") return Provenance::RawCase;
    return std::nullopt;
}

std::size_t FrameLexicon::entry_count() const {
    std::size_t n = 0;
    for (const auto& [stem, frames] : entries_) n += frames.size();
    return n;
}

double FrameLexicon::total(const std::string& stem) const {
    auto it = entries_.find(stem);
    if (it == entries_.end()) return 0.0;
    double sum = 0.0;
    for (const auto& [frame, count] : it->second) sum += count;
    return sum;
}

double FrameLexicon::grand_total() const {
    double sum = 0.0;
    for (const auto& [stem, frames] : entries_)
        for (const auto& [frame, count] : frames) sum += count;
    return sum;
}

void FrameLexicon::add(const std::string& stem, const Frame& frame, double weight) {
    if (!(weight > 0.0)) throw NonPositiveWeight("observation weight must be positive");
    if (mode_ == WeightMode::Integer && !is_whole(weight))
        throw MixedWeightModes("fractional weight in an integer-count lexicon");
    if (stem.empty()) throw Error("stem must be non-empty");
    entries_[stem][frame] += weight;
}

void FrameLexicon::merge_in(const FrameLexicon& other) {
    if (other.empty()) return;
    if (empty()) {
        mode_ = other.mode_;
        provenance_ = other.provenance_;
        source_ = other.source_;
        entries_ = other.entries_;
        return;
    }
    if (mode_ != other.mode_)
        throw MixedWeightModes("cannot merge lexica with different weight modes");
    for (const auto& [stem, frames] : other.entries_)
        for (const auto& [frame, count] : frames) entries_[stem][frame] += count;
}

std::map<Frame, double> FrameLexicon::relative_frequencies(const std::string& stem) const {
    auto it = entries_.find(stem);
    if (it == entries_.end()) throw UnknownStem("stem '" + stem + "' not in lexicon");
    double stem_total = total(stem);
    std::map<Frame, double> out;
    for (const auto& [frame, count] : it->second) out[frame] = count / stem_total;
    return out;
}

std::vector<std::pair<std::string, double>> FrameLexicon::top_k_stems(std::size_t k) const {
    std::vector<std::pair<std::string, double>> ranked;
    ranked.reserve(entries_.size());
    for (const auto& [stem, frames] : entries_) ranked.emplace_back(stem, total(stem));
    // entries_ iterates in stem order, so a stable sort keeps ties
    // lexicographic.
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    if (ranked.size() > k) ranked.resize(k);
    return ranked;
}

FrameLexicon merge(const FrameLexicon& a, const FrameLexicon& b) {
    FrameLexicon out = a;
    out.merge_in(b);
    return out;
}

double binomial_upper_tail(std::uint64_t n, std::uint64_t m, double rate) {
    if (m == 0) return 1.0;
    if (m > n) return 0.0;
    const long double log_p = std::log(static_cast<long double>(rate));
    const long double log_q = std::log1p(static_cast<long double>(-rate));
    const long double log_gamma_n1 = std::lgamma(static_cast<long double>(n) + 1.0L);
    auto log_term = [&](std::uint64_t k) {
        return log_gamma_n1 - std::lgamma(static_cast<long double>(k) + 1.0L) -
               std::lgamma(static_cast<long double>(n - k) + 1.0L) +
               static_cast<long double>(k) * log_p + static_cast<long double>(n - k) * log_q;
    };

    if (n <= 1000) {
        long double sum = 0.0L;
        for (std::uint64_t k = m; k <= n; ++k) sum += std::exp(log_term(k));
        return static_cast<double>(std::min(sum, 1.0L));
    }

    // log-sum-exp keeps very small tails out of the underflow range
    long double peak = log_term(m);
    for (std::uint64_t k = m + 1; k <= n; ++k) peak = std::max(peak, log_term(k));
    long double sum = 0.0L;
    for (std::uint64_t k = m; k <= n; ++k) sum += std::exp(log_term(k) - peak);
    long double log_tail = peak + std::log(sum);
    if (log_tail >= 0.0L) return 1.0;
    return static_cast<double>(std::exp(log_tail));
}

FrameLexicon binomial_filter(const FrameLexicon& lexicon, double rate, double alpha) {
    if (!(rate > 0.0) || !(rate < 1.0))
        throw InvalidRate("error rate must lie in (0, 1)");
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw InvalidSignificance("significance level must lie in (0, 1)");
    if (lexicon.mode() != WeightMode::Integer)
        throw MixedWeightModes("binomial filter requires an integer-count lexicon");

    FrameLexicon out(lexicon.mode(), lexicon.provenance(), lexicon.source());
    for (const auto& [stem, frames] : lexicon.entries()) {
        auto n = static_cast<std::uint64_t>(std::llround(lexicon.total(stem)));
        for (const auto& [frame, count] : frames) {
            auto m = static_cast<std::uint64_t>(std::llround(count));
            if (binomial_upper_tail(n, m, rate) <= alpha) out.add(stem, frame, count);
        }
    }
    return out;
}

void write_lexicon_tsv(std::ostream& out, const FrameLexicon& lexicon) {
    out << "# subcat-lexicon\tmode=" << weight_mode_name(lexicon.mode())
        << "\tprovenance=" << provenance_name(lexicon.provenance())
        << "\tsource=" << lexicon.source() << '\n';
    for (const auto& [stem, frames] : lexicon.entries()) {
        double stem_total = lexicon.total(stem);
        std::vector<std::pair<std::string, double>> rows;
        rows.reserve(frames.size());
        for (const auto& [frame, count] : frames) rows.emplace_back(frame.canonical(), count);
        std::sort(rows.begin(), rows.end());
        for (const auto& [canonical, count] : rows) {
            out << stem << '\t' << canonical << '\t' << format_count(count, lexicon.mode())
                << '\t' << format_rel_freq(count / stem_total) << '\n';
        }
    }
}

FrameLexicon read_lexicon_tsv(std::istream& in) {
    WeightMode mode = WeightMode::Integer;
    Provenance provenance = Provenance::Treebank;
    std::string source;

    std::string line;
    std::size_t line_no = 0;
    std::vector<std::tuple<std::string, Frame, double>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            for (const std::string& field : split_on(line.substr(1), '\t')) {
                std::size_t eq = field.find('=');
                if (eq == std::string::npos) continue;
                std::string key = field.substr(0, eq);
                std::string value = field.substr(eq + 1);
                if (key == "mode") {
                    if (auto m = parse_weight_mode(value)) mode = *m;
                } else if (key == "provenance") {
                    if (auto p = parse_provenance(value)) provenance = *p;
                } else if (key == "source") {
                    source = value;
                }
            }
            continue;
        }
        std::vector<std::string> fields = split_on(line, '\t');
        if (fields.size() < 3)
            throw MalformedRow("lexicon row needs stem, frame and count", line_no);
        if (fields[0].empty()) throw MalformedRow("empty stem", line_no);
        char* end = nullptr;
        double count = std::strtod(fields[2].c_str(), &end);
        if (end == fields[2].c_str() || *end != '\0' || !(count > 0.0))
            throw MalformedRow("count '" + fields[2] + "' is not a positive number", line_no);
        rows.emplace_back(fields[0], Frame::from_canonical(fields[1]), count);
    }
    FrameLexicon out(mode, provenance, source);
    for (auto& [stem, frame, count] : rows) out.add(stem, frame, count);
    return out;
}

void write_lexicon_tsv_file(const std::filesystem::path& path, const FrameLexicon& lexicon) {
    AtomicWriter writer(path);
    write_lexicon_tsv(writer.stream(), lexicon);
    writer.commit();
}

FrameLexicon read_lexicon_tsv_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open lexicon file: " + path.string());
    return read_lexicon_tsv(in);
}

nlohmann::ordered_json lexicon_json(const FrameLexicon& lexicon) {
    nlohmann::ordered_json obj;
    obj["mode"] = weight_mode_name(lexicon.mode());
    obj["provenance"] = provenance_name(lexicon.provenance());
    obj["source"] = lexicon.source();
    obj["stems"] = lexicon.stem_count();
    obj["entry_count"] = lexicon.entry_count();
    nlohmann::ordered_json entries = nlohmann::ordered_json::object();
    for (const auto& [stem, frames] : lexicon.entries()) {
        nlohmann::ordered_json frame_obj = nlohmann::ordered_json::object();
        std::vector<std::pair<std::string, double>> rows;
        for (const auto& [frame, count] : frames) rows.emplace_back(frame.canonical(), count);
        std::sort(rows.begin(), rows.end());
        for (const auto& [canonical, count] : rows) {
            if (lexicon.mode() == WeightMode::Integer)
                frame_obj[canonical] = static_cast<std::int64_t>(std::llround(count));
            else
                frame_obj[canonical] = count;
        }
        entries[stem] = frame_obj;
    }
    obj["entries"] = entries;
    return obj;
}

FrameLexicon lexicon_from_json(const nlohmann::json& obj) {
    WeightMode mode = parse_weight_mode(obj.value("mode", "INTEGER")).value_or(WeightMode::Integer);
    Provenance provenance =
        parse_provenance(obj.value("provenance", "TREEBANK")).value_or(Provenance::Treebank);
    FrameLexicon lexicon(mode, provenance, obj.value("source", ""));
    if (obj.contains("entries")) {
        for (const auto& [stem, frames] : obj.at("entries").items())
            for (const auto& [canonical, count] : frames.items())
                lexicon.add(stem, Frame::from_canonical(canonical), count.get<double>());
    }
    return lexicon;
}

}  // namespace subcat
