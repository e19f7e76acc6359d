#include "leibniz/algebra_io.hpp"

#include <json.hpp>

#include <set>
#include <tuple>

namespace leibniz {

using nlohmann::json;

Algebra parse_algebra(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw AlgebraFormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("brackets"))
        throw AlgebraFormatError("document must be an object with \"dim\" and \"brackets\"");
    if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0)
        throw AlgebraFormatError("\"dim\" must be a positive integer");
    const std::size_t n = doc["dim"].get<std::size_t>();
    if (!doc["brackets"].is_array()) throw AlgebraFormatError("\"brackets\" must be an array");

    Algebra a(n);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& entry : doc["brackets"]) {
        if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") || !entry.contains("out"))
            throw AlgebraFormatError("bracket entries need \"i\", \"j\" and \"out\"");
        if (!entry["i"].is_number_unsigned() || !entry["j"].is_number_unsigned())
            throw AlgebraFormatError("bracket indices must be positive integers");
        const std::size_t i = entry["i"].get<std::size_t>();
        const std::size_t j = entry["j"].get<std::size_t>();
        if (i < 1 || i > n || j < 1 || j > n) throw AlgebraFormatError("bracket index out of range");
        if (!entry["out"].is_array()) throw AlgebraFormatError("\"out\" must be an array");
        for (const auto& term : entry["out"]) {
            if (!term.is_array() || term.size() != 2 || !term[0].is_number_unsigned() || !term[1].is_string())
                throw AlgebraFormatError("terms must be [k, \"coefficient\"] pairs");
            const std::size_t k = term[0].get<std::size_t>();
            if (k < 1 || k > n) throw AlgebraFormatError("term index out of range");
            if (!seen.insert({i, j, k}).second) throw AlgebraFormatError("duplicate (i, j, k) entry");
            Rational c;
            try {
                c = Rational::parse(term[1].get<std::string>());
            } catch (const std::invalid_argument& e) {
                throw AlgebraFormatError(e.what());
            }
            if (c.is_zero()) throw AlgebraFormatError("zero coefficient listed");
            a.add_term(i, j, k, c);
        }
    }
    return a;
}

std::string emit_algebra(const Algebra& a) {
    json doc;
    doc["dim"] = a.dim();
    doc["brackets"] = json::array();
    for (const auto& [pair, terms] : a.tensor()) {
        json entry;
        entry["i"] = pair.first;
        entry["j"] = pair.second;
        entry["out"] = json::array();
        for (const auto& [k, c] : terms) entry["out"].push_back(json::array({k, c.str()}));
        doc["brackets"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

}  // namespace leibniz
