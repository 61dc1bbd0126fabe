// SPDX-License-Identifier: Apache-2.0
#pragma once

// Serialization of array codes: a JSON document and a plain text form (one row per line,
// arrays separated by a blank line).

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "array.hpp"
#include "arraycode.hpp"
#include "error.hpp"

namespace dbarray {

struct CodeDocument {
    ArrayCode code;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
};

inline nlohmann::ordered_json to_json(const CodeDocument& doc)
{
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(doc.code.kind));
    j["r"] = doc.code.r;
    j["t"] = doc.code.t;
    j["n"] = doc.code.n;
    j["m"] = doc.code.m;
    j["arrays"] = nlohmann::ordered_json::array();
    for (const auto& a : doc.code.arrays)
        j["arrays"].push_back(a.row_strings());
    j["meta"] = doc.meta.is_null() ? nlohmann::ordered_json::object() : doc.meta;
    return j;
}

inline std::string dump_json(const CodeDocument& doc) { return to_json(doc).dump(2) + "\n"; }

inline CodeDocument parse_json(const std::string& text)
{
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse, std::string("malformed JSON: ") + e.what());
    }
    CodeDocument doc;
    try {
        doc.code.kind = parse_kind(j.at("kind").get<std::string>());
        doc.code.r = j.at("r").get<std::size_t>();
        doc.code.t = j.at("t").get<std::size_t>();
        doc.code.n = j.at("n").get<int>();
        doc.code.m = j.at("m").get<int>();
        for (const auto& rows : j.at("arrays"))
            doc.code.arrays.push_back(CyclicArray::from_rows(rows.get<std::vector<std::string>>()));
        if (j.contains("meta"))
            doc.meta = j.at("meta");
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse, std::string("invalid code document: ") + e.what());
    }
    for (std::size_t a = 0; a < doc.code.arrays.size(); ++a)
        require(doc.code.arrays[a].rows() == doc.code.r && doc.code.arrays[a].cols() == doc.code.t, errc::parse,
                "array " + std::to_string(a) + " does not match the declared " + std::to_string(doc.code.r) + "x" +
                    std::to_string(doc.code.t));
    return doc;
}

/// Text form: a "# label" header line, then the arrays.
inline std::string dump_text(const ArrayCode& code)
{
    std::ostringstream os;
    os << "# " << code.label() << "\n";
    for (std::size_t a = 0; a < code.arrays.size(); ++a) {
        if (a > 0)
            os << "\n";
        os << code.arrays[a];
    }
    return os.str();
}

/// Reads arrays from the text form; lines starting with '#' are ignored.
inline std::vector<CyclicArray> parse_text_arrays(const std::string& text)
{
    std::vector<CyclicArray> out;
    std::vector<std::string> rows;
    std::istringstream is(text);
    std::string line;
    const auto flush = [&] {
        if (!rows.empty())
            out.push_back(CyclicArray::from_rows(rows));
        rows.clear();
    };
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty() && line.front() == '#')
            continue;
        if (line.find_first_not_of(" \t") == std::string::npos)
            flush();
        else
            rows.push_back(line);
    }
    flush();
    require(!out.empty(), errc::parse, "no arrays found");
    return out;
}

} // namespace dbarray
