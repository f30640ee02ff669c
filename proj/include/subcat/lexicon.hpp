// lexicon.hpp : frame-frequency lexica: accumulation, merging, noise
// filtering, serialization

#ifndef SUBCAT_LEXICON_HPP
#define SUBCAT_LEXICON_HPP

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "subcat/frame.hpp"

namespace subcat {

enum class WeightMode { Integer, Fractional };
enum class Provenance { Treebank, RawCase };

std::string_view weight_mode_name(WeightMode mode);
std::string_view provenance_name(Provenance provenance);
std::optional<WeightMode> parse_weight_mode(std::string_view text);
std::optional<Provenance> parse_provenance(std::string_view text);

// stem -> frame -> count. Counts are whole numbers in Integer mode and
// positive reals in Fractional mode; the two modes never mix in one
// lexicon. Zero-count entries are never stored.
class FrameLexicon {
  public:
    using FrameCounts = std::map<Frame, double>;
    using Entries = std::map<std::string, FrameCounts>;

    FrameLexicon() = default;
    FrameLexicon(WeightMode mode, Provenance provenance, std::string source)
        : mode_(mode), provenance_(provenance), source_(std::move(source)) {}

    WeightMode mode() const { return mode_; }
    Provenance provenance() const { return provenance_; }
    const std::string& source() const { return source_; }
    void set_source(std::string source) { source_ = std::move(source); }

    const Entries& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t stem_count() const { return entries_.size(); }
    std::size_t entry_count() const;
    bool contains(const std::string& stem) const { return entries_.contains(stem); }

    double total(const std::string& stem) const;  // 0 for unknown stems
    double grand_total() const;

    // Throws NonPositiveWeight; in Integer mode a fractional weight is a
    // MixedWeightModes error.
    void add(const std::string& stem, const Frame& frame, double weight = 1.0);

    // Pointwise count addition. An empty lexicon is the identity and is
    // compatible with either mode; otherwise modes must match.
    void merge_in(const FrameLexicon& other);

    // Counts divided by the stem total; throws UnknownStem.
    std::map<Frame, double> relative_frequencies(const std::string& stem) const;

    // Stems by total descending, ties broken lexicographically.
    std::vector<std::pair<std::string, double>> top_k_stems(std::size_t k) const;

  private:
    Entries entries_;
    WeightMode mode_ = WeightMode::Integer;
    Provenance provenance_ = Provenance::Treebank;
    std::string source_;
};

FrameLexicon merge(const FrameLexicon& a, const FrameLexicon& b);

// Upper tail P(X >= m) for X ~ Binomial(n, rate), in log space with a
// direct summation fallback for n <= 1000.
double binomial_upper_tail(std::uint64_t n, std::uint64_t m, double rate);

// Brent-style noise filter: keeps (stem, frame) iff the count is unlikely
// under a pure-noise binomial with the given error rate, i.e.
// P(X >= m | Binomial(total(stem), rate)) <= alpha. Integer mode only;
// surviving counts are unchanged and stem totals are recomputed.
FrameLexicon binomial_filter(const FrameLexicon& lexicon, double rate, double alpha);

// TSV: one '#' header line carrying mode/provenance/source, then rows
// `stem \t frame \t count \t rel_freq` sorted by stem then canonical
// frame. write/read round-trips entries and counts exactly.
void write_lexicon_tsv(std::ostream& out, const FrameLexicon& lexicon);
FrameLexicon read_lexicon_tsv(std::istream& in);
void write_lexicon_tsv_file(const std::filesystem::path& path, const FrameLexicon& lexicon);
FrameLexicon read_lexicon_tsv_file(const std::filesystem::path& path);

nlohmann::ordered_json lexicon_json(const FrameLexicon& lexicon);
FrameLexicon lexicon_from_json(const nlohmann::json& obj);

}  // namespace subcat

#endif  // SUBCAT_LEXICON_HPP
