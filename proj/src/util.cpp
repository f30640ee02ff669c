// util.cpp

#include "subcat/util.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "subcat/errors.hpp"

namespace subcat {

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

std::vector<std::string> split_sentences_naive(std::string_view text) {
    std::vector<std::string> sentences;
    std::string current;
    auto flush = [&] {
        std::size_t begin = current.find_first_not_of(' ');
        if (begin == std::string::npos) {
            current.clear();
            return;
        }
        std::size_t end = current.find_last_not_of(' ');
        sentences.push_back(current.substr(begin, end - begin + 1));
        current.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c == '.' || c == '?' || c == '!') {
            flush();
            continue;
        }
        if (c == 0xDB && i + 1 < text.size() &&
            static_cast<unsigned char>(text[i + 1]) == 0x94) {  // U+06D4
            flush();
            ++i;
            continue;
        }
        current += std::isspace(c) ? ' ' : text[i];
    }
    flush();
    return sentences;
}

std::vector<std::string> split_on(std::string_view text, char sep) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.emplace_back(text.substr(start));
            return fields;
        }
        fields.emplace_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<std::string> read_lines(const std::filesystem::path& path, bool skip_blank) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (skip_blank) {
            bool blank = true;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) {
                    blank = false;
                    break;
                }
            if (blank) continue;
        }
        lines.push_back(line);
    }
    return lines;
}

double round_fraction(double value, int decimals) {
    double scale = std::pow(10.0, decimals);
    return std::round(value * scale) / scale;
}

void put_fraction(nlohmann::ordered_json& obj, const std::string& key,
                  const std::optional<double>& value, int precision) {
    if (value.has_value()) {
        obj[key] = round_fraction(*value, precision);
        obj[key + "_exact"] = *value;
    } else {
        obj[key] = nullptr;
        obj[key + "_exact"] = nullptr;
    }
}

AtomicWriter::AtomicWriter(const std::filesystem::path& path)
    : final_path_(path), temp_path_(path.string() + ".tmp") {
    if (final_path_.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(final_path_.parent_path(), ec);
    }
    out_.open(temp_path_, std::ios::binary | std::ios::trunc);
    if (!out_) throw IoError("cannot open output file: " + temp_path_.string());
}

AtomicWriter::~AtomicWriter() {
    if (!committed_) {
        out_.close();
        std::error_code ec;
        std::filesystem::remove(temp_path_, ec);
    }
}

void AtomicWriter::commit() {
    out_.flush();
    if (!out_) throw IoError("write failed: " + temp_path_.string());
    out_.close();
    std::error_code ec;
    std::filesystem::rename(temp_path_, final_path_, ec);
    if (ec) {
        std::filesystem::remove(temp_path_, ec);
        throw IoError("cannot move output into place: " + final_path_.string());
    }
    committed_ = true;
}

std::size_t env_worker_count() {
    const char* raw = std::getenv("SUBCAT_WORKERS");
    if (raw == nullptr || *raw == '\0') return 1;
    char* end = nullptr;
    long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1) return 1;
    if (value > 64) return 64;
    return static_cast<std::size_t>(value);
}

}  // namespace subcat
