#pragma once

// Input schema {"schema": 1, "weights": [[...],[...]], "labels": [...]} read
// from JSON or from the TOML subset that spells the same three keys.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "vgit/gkz.hpp"

namespace vgit {

using ordered_json = nlohmann::ordered_json;

namespace detail {

// TOML subset: `key = value` lines, integers, strings, nested arrays, # comments
class TomlSubset {
public:
    explicit TomlSubset(std::string text) : s_(std::move(text)) {}

    ordered_json parse() {
        ordered_json doc = ordered_json::object();
        for (;;) {
            skipSpaceAndComments(true);
            if (pos_ >= s_.size())
                break;
            std::string key = parseKey();
            skipSpaceAndComments(false);
            expect('=');
            skipSpaceAndComments(false);
            if (doc.contains(key))
                fail("duplicate key '" + key + "'");
            doc[key] = parseValue();
            skipSpaceAndComments(false);
            if (pos_ < s_.size() && s_[pos_] != '\n')
                fail("trailing characters after value of '" + key + "'");
        }
        return doc;
    }

private:
    std::string s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        std::size_t line = 1 + static_cast<std::size_t>(std::count(s_.begin(), s_.begin() + static_cast<long>(std::min(pos_, s_.size())), '\n'));
        throw Error(ErrorKind::InvalidInput, "TOML line " + std::to_string(line) + ": " + why);
    }

    void skipSpaceAndComments(bool newlines) {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        if (pos_ >= s_.size() || s_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string parseKey() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '-'))
            ++pos_;
        if (start == pos_)
            fail("expected a bare key");
        return s_.substr(start, pos_ - start);
    }

    ordered_json parseValue() {
        if (pos_ >= s_.size())
            fail("missing value");
        char c = s_[pos_];
        if (c == '[') {
            ++pos_;
            ordered_json arr = ordered_json::array();
            for (;;) {
                skipSpaceAndComments(true);
                if (pos_ < s_.size() && s_[pos_] == ']') {
                    ++pos_;
                    return arr;
                }
                arr.push_back(parseValue());
                skipSpaceAndComments(true);
                if (pos_ < s_.size() && s_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                skipSpaceAndComments(true);
                expect(']');
                return arr;
            }
        }
        if (c == '"') {
            ++pos_;
            std::string out;
            while (pos_ < s_.size() && s_[pos_] != '"') {
                if (s_[pos_] == '\\' || s_[pos_] == '\n')
                    fail("escapes and multi-line strings are not supported");
                out += s_[pos_++];
            }
            expect('"');
            return out;
        }
        std::size_t start = pos_;
        if (c == '+' || c == '-') ++pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        std::string digits;
        for (std::size_t i = start; i < pos_; ++i)
            if (s_[i] != '_' && s_[i] != '+') digits += s_[i];
        if (digits.empty() || digits == "-")
            fail("unsupported value");
        try {
            return std::stoll(digits);
        } catch (const std::exception&) {
            fail("integer out of range");
        }
    }
};

} // namespace detail

inline ordered_json parseTomlSubset(const std::string& text) { return detail::TomlSubset(text).parse(); }

struct LoadedInput {
    WeightMatrix weights;
    ordered_json echo;
};

inline LoadedInput inputFromJson(const ordered_json& doc) {
    if (!doc.is_object())
        throw Error(ErrorKind::InvalidInput, "input must be an object");
    for (const auto& [k, v] : doc.items())
        if (k != "schema" && k != "weights" && k != "labels")
            throw Error(ErrorKind::InvalidInput, "unknown input key '" + k + "'");
    if (!doc.contains("schema") || !doc["schema"].is_number_integer() || doc["schema"].get<i64>() != 1)
        throw Error(ErrorKind::InvalidInput, "input schema must be 1");
    if (!doc.contains("weights") || !doc["weights"].is_array())
        throw Error(ErrorKind::InvalidInput, "weights must be an array of two integer rows");
    std::vector<std::vector<i64>> raw;
    for (const auto& row : doc["weights"]) {
        if (!row.is_array())
            throw Error(ErrorKind::InvalidInput, "weights rows must be arrays");
        std::vector<i64> r;
        for (const auto& v : row) {
            if (!v.is_number_integer())
                throw Error(ErrorKind::InvalidInput, "weights must be integers");
            i64 x = v.get<i64>();
            if (x > (i64(1) << 20) || x < -(i64(1) << 20))
                throw Error(ErrorKind::InvalidInput, "weight entries must lie in [-2^20, 2^20]");
            r.push_back(x);
        }
        raw.push_back(std::move(r));
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array())
            throw Error(ErrorKind::InvalidInput, "labels must be an array of strings");
        for (const auto& l : doc["labels"]) {
            if (!l.is_string())
                throw Error(ErrorKind::InvalidInput, "labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    LoadedInput in;
    in.weights = parseAndValidate(raw, labels);
    in.echo = ordered_json::object();
    in.echo["schema"] = 1;
    in.echo["weights"] = raw;
    in.echo["labels"] = in.weights.labels;
    return in;
}

inline LoadedInput parseInputText(const std::string& text, bool toml) {
    if (toml)
        return inputFromJson(parseTomlSubset(text));
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::InvalidInput, std::string("JSON: ") + e.what());
    }
    return inputFromJson(doc);
}

inline std::string readFile(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw Error(ErrorKind::InvalidInput, "cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline bool looksLikeToml(const std::string& path, const std::string& text) {
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0)
        return true;
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return false;
    auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && text[p] != '{';
}

inline LoadedInput loadInput(const std::string& path) {
    std::string text = readFile(path);
    return parseInputText(text, looksLikeToml(path, text));
}

} // namespace vgit
