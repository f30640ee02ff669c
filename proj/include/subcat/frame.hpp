// frame.hpp : a subcategorization frame, an unordered bag of dependent labels

#ifndef SUBCAT_FRAME_HPP
#define SUBCAT_FRAME_HPP

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "subcat/errors.hpp"

namespace subcat {

// A frame is stored as a sorted label sequence. In the default set mode
// duplicate labels collapse; multiset mode keeps them. The canonical text
// form is the sorted labels joined by '+', or "EMPTY" for the empty frame.
// Labels may not contain whitespace or '+', and may not be the reserved
// word "EMPTY"; this keeps canonical forms injective.
class Frame {
  public:
    Frame() = default;

    explicit Frame(std::vector<std::string> labels, bool multiset = false) {
        for (const std::string& label : labels) validate_label(label);
        std::sort(labels.begin(), labels.end());
        if (!multiset) labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        labels_ = std::move(labels);
    }

    Frame(std::initializer_list<std::string> labels)
        : Frame(std::vector<std::string>(labels)) {}

    static Frame from_canonical(const std::string& canonical) {
        if (canonical == "EMPTY") return Frame{};
        std::vector<std::string> labels;
        std::size_t start = 0;
        while (start <= canonical.size()) {
            std::size_t pos = canonical.find('+', start);
            if (pos == std::string::npos) pos = canonical.size();
            labels.push_back(canonical.substr(start, pos - start));
            start = pos + 1;
        }
        return Frame(std::move(labels), /*multiset=*/true);
    }

    std::string canonical() const {
        if (labels_.empty()) return "EMPTY";
        std::string out = labels_.front();
        for (std::size_t i = 1; i < labels_.size(); ++i) {
            out += '+';
            out += labels_[i];
        }
        return out;
    }

    const std::vector<std::string>& labels() const { return labels_; }
    bool empty() const { return labels_.empty(); }
    std::size_t size() const { return labels_.size(); }

    bool contains(const std::string& label) const {
        return std::binary_search(labels_.begin(), labels_.end(), label);
    }

    friend bool operator==(const Frame&, const Frame&) = default;
    friend auto operator<=>(const Frame& a, const Frame& b) { return a.labels_ <=> b.labels_; }

  private:
    static void validate_label(const std::string& label) {
        if (label.empty()) throw Error("frame label must be non-empty");
        if (label == "EMPTY") throw Error("frame label 'EMPTY' is reserved");
        for (char c : label) {
            if (c == '+' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
                throw Error("frame label '" + label + "' contains '+' or whitespace");
        }
    }

    std::vector<std::string> labels_;
};

}  // namespace subcat

#endif  // SUBCAT_FRAME_HPP
