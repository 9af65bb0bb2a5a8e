#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "deltaqt/error.hpp"
#include "deltaqt/lattice.hpp"
#include "deltaqt/polyomino.hpp"
#include "deltaqt/qt_polynomial.hpp"

namespace dqt {

using Json = nlohmann::ordered_json;

inline Json to_json(const Path& p, const std::string& family = "") {
    Json j;
    j["family"] = family;
    j["area_word"] = p.area_word();
    if (p.labelled()) j["labels"] = *p.labels();
    else j["labels"] = nullptr;
    j["decorated_rises"] = std::vector<int>(p.decorated_rises().begin(), p.decorated_rises().end());
    j["ghost_row"] = p.ghost_row();
    return j;
}

inline Json to_json(const PolyominoWord& w) {
    Json j;
    Json letters = Json::array();
    for (const Letter& l : w.letters()) letters.push_back({{"v", l.value}, {"barred", l.barred}});
    j["letters"] = letters;
    j["decorated_rises"] = std::vector<int>(w.decorated_rises().begin(), w.decorated_rises().end());
    return j;
}

inline Json to_json(const QtPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"q_exp", e.first}, {"t_exp", e.second}, {"coeff", c.get_str()}});
    return terms;
}

namespace detail {
template <class T>
T json_field(const Json& j, const char* key) {
    if (!j.contains(key)) throw ValidationError(std::string("missing JSON field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("bad JSON field '") + key + "': " + e.what());
    }
}
}  // namespace detail

inline Path path_from_json(const Json& j) {
    auto area = detail::json_field<std::vector<int>>(j, "area_word");
    std::optional<std::vector<int>> labels;
    if (j.contains("labels") && !j.at("labels").is_null()) labels = detail::json_field<std::vector<int>>(j, "labels");
    std::set<int> dec;
    if (j.contains("decorated_rises")) {
        auto d = detail::json_field<std::vector<int>>(j, "decorated_rises");
        dec.insert(d.begin(), d.end());
    }
    bool ghost = j.contains("ghost_row") ? detail::json_field<bool>(j, "ghost_row") : false;
    return Path(area, labels, dec, ghost);
}

inline PolyominoWord polyomino_from_json(const Json& j) {
    if (!j.contains("letters") || !j.at("letters").is_array()) throw ValidationError("missing JSON array 'letters'");
    std::vector<Letter> letters;
    for (const auto& l : j.at("letters")) letters.push_back({detail::json_field<int>(l, "v"), detail::json_field<bool>(l, "barred")});
    std::set<int> dec;
    if (j.contains("decorated_rises")) {
        auto d = detail::json_field<std::vector<int>>(j, "decorated_rises");
        dec.insert(d.begin(), d.end());
    }
    return PolyominoWord(letters, dec);
}

inline bool is_polyomino_json(const Json& j) { return j.is_object() && j.contains("letters"); }

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace dqt
