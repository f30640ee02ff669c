// morphology.hpp : pluggable morphological analysis and ambiguity statistics

#ifndef SUBCAT_MORPHOLOGY_HPP
#define SUBCAT_MORPHOLOGY_HPP

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace subcat {

enum class Pos { Verb, Noun, Adj, Other };

std::optional<Pos> parse_pos(std::string_view text);
std::string_view pos_name(Pos pos);

// One candidate analysis of a surface token. Case, when known, lives in
// features under the key "case" with values like NOM/ACC/GEN.
struct MorphAnalysis {
    std::string surface;
    std::string stem;
    Pos pos = Pos::Other;
    std::map<std::string, std::string> features;

    std::optional<std::string> feature(const std::string& key) const {
        auto it = features.find(key);
        if (it == features.end()) return std::nullopt;
        return it->second;
    }

    friend bool operator==(const MorphAnalysis&, const MorphAnalysis&) = default;
};

inline const std::string kCaseFeature = "case";

// Anything mapping a surface form to candidate analyses plugs in here;
// analyzers are read-only after construction and safe to share.
class Analyzer {
  public:
    virtual ~Analyzer() = default;
    virtual std::vector<MorphAnalysis> analyze(const std::string& surface) const = 0;
};

// Lexicon-backed analyzer: each TSV row is one analysis, duplicate
// surfaces stack in file order.
class LexiconAnalyzer final : public Analyzer {
  public:
    std::vector<MorphAnalysis> analyze(const std::string& surface) const override;
    std::size_t surface_count() const { return entries_.size(); }
    std::size_t analysis_count() const { return analyses_; }
    void add(MorphAnalysis analysis);

  private:
    std::unordered_map<std::string, std::vector<MorphAnalysis>> entries_;
    std::size_t analyses_ = 0;
};

// Rows: surface \t stem \t pos [\t feature=value;...]. Blank lines and
// '#' comments are skipped. Throws MalformedRow / UnknownPos / EmptyLexicon.
LexiconAnalyzer load_analyzer_lexicon(std::istream& in);
LexiconAnalyzer load_analyzer_lexicon(const std::string& text);
LexiconAnalyzer load_analyzer_lexicon_file(const std::filesystem::path& path);

enum class UnknownPolicy {
    CountAsZero,  // lexicon gaps stay visible in the histogram at k=0
    CountAsOne,
    Skip,
};

struct AmbiguityReport {
    std::size_t token_count = 0;
    double mean = 0.0;
    double std_dev = 0.0;  // population form
    std::size_t max = 0;
    std::set<std::string> max_tokens;
    std::map<std::size_t, std::size_t> histogram;
};

// Mergeable accumulator behind ambiguity_stats; merge order never changes
// the finalized report.
struct AmbiguityTally {
    std::map<std::size_t, std::size_t> histogram;
    std::size_t max = 0;
    std::set<std::string> max_tokens;

    void add(const std::string& surface, std::size_t analysis_count);
    void add_token(const std::string& surface, const Analyzer& analyzer, UnknownPolicy policy);
    void merge(const AmbiguityTally& other);
    AmbiguityReport finalize() const;  // throws EmptyCorpus when nothing counted
};

AmbiguityReport ambiguity_stats(std::span<const std::string> tokens, const Analyzer& analyzer,
                                UnknownPolicy policy = UnknownPolicy::CountAsZero);

enum class VerbPolicy { Any, All, Majority };

std::optional<VerbPolicy> parse_verb_policy(std::string_view text);

// ANY: some analysis is a verb; ALL: non-empty and every analysis is a
// verb; MAJORITY: strictly more than half. Empty input is never a verb.
bool is_verb_candidate(std::span<const MorphAnalysis> analyses, VerbPolicy policy);

nlohmann::ordered_json ambiguity_json(const AmbiguityReport& report, int precision = 2);
void write_histogram_text(std::ostream& out, const AmbiguityReport& report);

}  // namespace subcat

#endif  // SUBCAT_MORPHOLOGY_HPP
