// treebank.cpp : extracting verb instances from bracketed trees

#include "subcat/treebank.hpp"

#include "subcat/util.hpp"

namespace subcat {

bool ExtractionConfig::is_verb_tag(const std::string& tag) const {
    for (const std::string& sub : verb_tag_substrings)
        if (!sub.empty() && tag.find(sub) != std::string::npos) return true;
    return false;
}

bool ExtractionConfig::is_vp_label(const std::string& label) const {
    for (const std::string& prefix : vp_label_prefixes)
        if (label.starts_with(prefix)) return true;
    return false;
}

bool ExtractionConfig::is_ignored_label(const std::string& label) const {
    for (const std::string& ignored : ignored_sibling_labels)
        if (label == ignored) return true;
    return false;
}

std::string ExtractionConfig::frame_label(const std::string& label) const {
    if (!strip_label_suffixes) return label;
    std::size_t pos = label.find('-');
    return pos == std::string::npos ? label : label.substr(0, pos);
}

void ExtractResult::merge(ExtractResult&& other) {
    instances.insert(instances.end(), std::make_move_iterator(other.instances.begin()),
                     std::make_move_iterator(other.instances.end()));
    census.merge(other.census);
}

void CensusStats::merge(const CensusStats& other) {
    sentences += other.sentences;
    vps += other.vps;
    vps_with_verb += other.vps_with_verb;
    stems.insert(other.stems.begin(), other.stems.end());
}

namespace {

void collect_vps(const TreeNode& node, std::vector<std::size_t>& path,
                 const ExtractionConfig& config, std::vector<VpHit>& out) {
    if (config.is_vp_label(node.label)) out.push_back({path, &node});
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        path.push_back(i);
        collect_vps(node.children[i], path, config, out);
        path.pop_back();
    }
}

struct VerbChild {
    std::size_t child_index;
    const TreeNode* leaf;
};

// Leftmost-first search over the VP's immediate children: the child itself
// when it is a leaf, otherwise its own leaf children. Nested VPs are not
// descended into here; they get their own visit.
std::optional<VerbChild> find_verb_child(const TreeNode& vp, const ExtractionConfig& config) {
    for (std::size_t i = 0; i < vp.children.size(); ++i) {
        const TreeNode& child = vp.children[i];
        if (child.is_leaf()) {
            if (config.is_verb_tag(child.label)) return VerbChild{i, &child};
            continue;
        }
        for (const TreeNode& grandchild : child.children)
            if (grandchild.is_leaf() && config.is_verb_tag(grandchild.label))
                return VerbChild{i, &grandchild};
    }
    return std::nullopt;
}

std::string stem_of(const TreeNode& leaf, const ExtractionConfig& config) {
    const std::string& token = leaf.token.value_or("");
    if (config.stem_source == StemSource::TreebankLemma) {
        if (auto lemma = lemma_part(token)) return *lemma;
    }
    return surface_part(token);
}

}  // namespace

std::vector<VpHit> find_verb_phrases(const TreeNode& tree, const ExtractionConfig& config) {
    std::vector<VpHit> hits;
    std::vector<std::size_t> path;
    collect_vps(tree, path, config, hits);
    return hits;
}

std::optional<VerbInstance> extract_verb_instance(const TreeNode& vp,
                                                  const ExtractionConfig& config) {
    std::optional<VerbChild> verb = find_verb_child(vp, config);
    if (!verb) return std::nullopt;

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < vp.children.size(); ++i) {
        if (i == verb->child_index) continue;
        const std::string& raw = vp.children[i].label;
        if (config.is_ignored_label(raw)) continue;
        labels.push_back(config.frame_label(raw));
    }

    VerbInstance instance;
    instance.stem = stem_of(*verb->leaf, config);
    instance.verb_tag = verb->leaf->label;
    instance.frame = Frame(std::move(labels), config.multiset_frames);
    return instance;
}

ExtractResult extract_frames(std::span<const TreeNode> trees, const ExtractionConfig& config,
                             std::size_t first_sentence_id) {
    ExtractResult result;
    result.census.sentences = trees.size();
    for (std::size_t t = 0; t < trees.size(); ++t) {
        for (VpHit& hit : find_verb_phrases(trees[t], config)) {
            ++result.census.vps;
            std::optional<VerbInstance> instance = extract_verb_instance(*hit.node, config);
            if (!instance) continue;
            ++result.census.vps_with_verb;
            instance->sentence_id = first_sentence_id + t;
            instance->vp_path = std::move(hit.path);
            result.census.stems.insert(instance->stem);
            result.instances.push_back(std::move(*instance));
        }
    }
    return result;
}

std::string format_vp_path(const std::vector<std::size_t>& path) {
    if (path.empty()) return "-";
    std::string out = std::to_string(path.front());
    for (std::size_t i = 1; i < path.size(); ++i) {
        out += '.';
        out += std::to_string(path[i]);
    }
    return out;
}

void write_instances_tsv(std::ostream& out, std::span<const VerbInstance> instances) {
    for (const VerbInstance& instance : instances) {
        out << instance.sentence_id << '\t' << instance.stem << '\t' << instance.verb_tag << '\t'
            << instance.frame.canonical() << '\t' << format_vp_path(instance.vp_path) << '\n';
    }
}

nlohmann::ordered_json census_json(const CensusStats& census, int precision) {
    nlohmann::ordered_json obj;
    obj["sentences"] = census.sentences;
    obj["verb_phrases"] = census.vps;
    obj["verb_phrases_with_verb"] = census.vps_with_verb;
    obj["skipped_verb_phrases"] = census.skipped_vps();
    put_fraction(obj, "coverage", census.coverage(), precision);
    obj["unique_stems"] = census.unique_stems();
    return obj;
}

}  // namespace subcat
