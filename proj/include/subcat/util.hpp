// util.hpp : small shared helpers (tokenizing, files, rounding)

#ifndef SUBCAT_UTIL_HPP
#define SUBCAT_UTIL_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace subcat {

// Whitespace tokenization; the splitter used by the CLI for raw corpora.
std::vector<std::string> split_tokens(std::string_view line);

// Naive sentence segmentation on '.', '?', '!' and the Arabic full stop
// (U+06D4); terminators are dropped, inner newlines become spaces. Off by
// default in the CLI, which otherwise expects one sentence per line.
std::vector<std::string> split_sentences_naive(std::string_view text);

std::vector<std::string> split_on(std::string_view text, char sep);

std::string read_file(const std::filesystem::path& path);

// Reads a text file into lines, dropping '\r' and (by default) lines that
// are empty or whitespace-only.
std::vector<std::string> read_lines(const std::filesystem::path& path, bool skip_blank = true);

// Rounding applied to reported fractions at serialization time only.
double round_fraction(double value, int decimals);

// Emits `key` rounded plus `key_exact` at full precision; null when absent.
void put_fraction(nlohmann::ordered_json& obj, const std::string& key,
                  const std::optional<double>& value, int precision);

// Writes through a temp file in the same directory and renames on commit,
// so a failed run never leaves a partial output file.
class AtomicWriter {
  public:
    explicit AtomicWriter(const std::filesystem::path& path);
    ~AtomicWriter();
    AtomicWriter(const AtomicWriter&) = delete;
    AtomicWriter& operator=(const AtomicWriter&) = delete;

    std::ofstream& stream() { return out_; }
    void commit();

  private:
    std::filesystem::path final_path_;
    std::filesystem::path temp_path_;
    std::ofstream out_;
    bool committed_ = false;
};

// Worker count for sharded pipelines, from SUBCAT_WORKERS (default 1).
std::size_t env_worker_count();

}  // namespace subcat

#endif  // SUBCAT_UTIL_HPP
