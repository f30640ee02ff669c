// treebank.hpp : verb instance and frame extraction from constituency trees

#ifndef SUBCAT_TREEBANK_HPP
#define SUBCAT_TREEBANK_HPP

#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "subcat/frame.hpp"
#include "subcat/tree.hpp"

namespace subcat {

enum class StemSource {
    TreebankLemma,  // leaf lemma annotation when present, surface otherwise
    SurfaceForm,
};

struct ExtractionConfig {
    // A leaf whose tag contains any of these substrings is a verb, so
    // "IV" also matches "IV_PASS".
    std::vector<std::string> verb_tag_substrings{"IV", "PV"};
    // A node whose label starts with any of these prefixes is a verb phrase.
    std::vector<std::string> vp_label_prefixes{"VP"};
    // Sibling labels excluded from frames, by exact match on the raw label.
    std::vector<std::string> ignored_sibling_labels{
        "PUNC", "PUNCT", ".", ",", ":", ";", "?", "!", "``", "''", "-LRB-", "-RRB-"};
    bool strip_label_suffixes = false;  // NP-OBJ -> NP when set
    bool multiset_frames = false;       // keep duplicate sibling labels when set
    StemSource stem_source = StemSource::TreebankLemma;

    bool is_verb_tag(const std::string& tag) const;
    bool is_vp_label(const std::string& label) const;
    bool is_ignored_label(const std::string& label) const;
    std::string frame_label(const std::string& label) const;
};

// One observed verb usage. vp_path addresses the verb phrase as child
// indices from the root; an empty path means the root itself.
struct VerbInstance {
    std::string stem;
    std::string verb_tag;
    Frame frame;
    std::size_t sentence_id = 0;
    std::vector<std::size_t> vp_path;

    friend bool operator==(const VerbInstance&, const VerbInstance&) = default;
};

// Corpus-level extraction census. Mergeable: counts add, stems union, so
// sharded extraction reproduces the sequential result.
struct CensusStats {
    std::size_t sentences = 0;
    std::size_t vps = 0;
    std::size_t vps_with_verb = 0;
    std::set<std::string> stems;

    std::size_t skipped_vps() const { return vps - vps_with_verb; }
    std::size_t unique_stems() const { return stems.size(); }
    std::optional<double> coverage() const {
        if (vps == 0) return std::nullopt;
        return static_cast<double>(vps_with_verb) / static_cast<double>(vps);
    }
    void merge(const CensusStats& other);
};

struct VpHit {
    std::vector<std::size_t> path;
    const TreeNode* node = nullptr;
};

// Every node (nested ones included) whose label matches a VP prefix, in
// pre-order; paths address the original tree.
std::vector<VpHit> find_verb_phrases(const TreeNode& tree, const ExtractionConfig& config);

// Finds the verb among the VP's immediate children, scanning leaves and
// one preterminal level below, leftmost first. Returns the instance with
// stem, tag and frame filled in, or nothing when the VP has no verb;
// sentence_id and vp_path are left for the caller.
std::optional<VerbInstance> extract_verb_instance(const TreeNode& vp,
                                                  const ExtractionConfig& config);

struct ExtractResult {
    std::vector<VerbInstance> instances;
    CensusStats census;

    void merge(ExtractResult&& other);
};

ExtractResult extract_frames(std::span<const TreeNode> trees, const ExtractionConfig& config,
                             std::size_t first_sentence_id = 0);

// TSV stream: sentence_id, stem, verb_tag, frame canonical form, vp_path
// (child indices joined by '.', "-" for the root).
void write_instances_tsv(std::ostream& out, std::span<const VerbInstance> instances);
std::string format_vp_path(const std::vector<std::size_t>& path);

nlohmann::ordered_json census_json(const CensusStats& census, int precision = 2);

}  // namespace subcat

#endif  // SUBCAT_TREEBANK_HPP
