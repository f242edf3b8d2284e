#pragma once

// Canonical JSON forms. Keys keep insertion order so dumps are byte-stable:
//   Rat         "num/den"
//   PolyH       {"poly": [[exp, "num/den"], ...]}            exponents ascending
//   RatFuncH    {"num": <PolyH>, "den": <PolyH>}
//   elements    {"components": [[degree, <coeff>], ...]}    degrees ascending
//   AutoWord    {"word": [{"gen": "PhiX", "n": 3, "lambda": "2/1"}, ...]}

#include "weyl/algebra.hpp"
#include "weyl/automorphism.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace weyl {

using Json = nlohmann::ordered_json;

/// Malformed or non-conforming JSON document.
class JsonFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw JsonFormatError(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

inline long integer_field(const Json& j) {
    if (!j.is_number_integer()) throw JsonFormatError("expected an integer");
    return j.get<long>();
}

}  // namespace detail

inline Json to_json(const Rat& r) { return r.fraction(); }

inline Rat rat_from_json(const Json& j) {
    if (!j.is_string()) throw JsonFormatError("rational must be a \"num/den\" string");
    try {
        return Rat::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw JsonFormatError(e.what());
    }
}

inline Json to_json(const PolyH& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, to_json(c)}));
    return Json{{"poly", terms}};
}

inline PolyH poly_from_json(const Json& j) {
    const Json& terms = detail::field(j, "poly");
    if (!terms.is_array()) throw JsonFormatError("\"poly\" must be an array");
    PolyH p;
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 2) throw JsonFormatError("poly term must be [exp, coeff]");
        const long e = detail::integer_field(t[0]);
        if (e < 0) throw JsonFormatError("negative exponent");
        p += PolyH::monomial(rat_from_json(t[1]), static_cast<std::size_t>(e));
    }
    return p;
}

inline Json to_json(const RatFuncH& h) { return Json{{"num", to_json(h.num())}, {"den", to_json(h.den())}}; }

inline RatFuncH ratfunc_from_json(const Json& j) {
    try {
        return RatFuncH(poly_from_json(detail::field(j, "num")), poly_from_json(detail::field(j, "den")));
    } catch (const std::domain_error& e) {
        throw JsonFormatError(e.what());
    }
}

template <class Coeff>
Json to_json(const Graded<Coeff>& a) {
    Json comps = Json::array();
    for (const auto& [d, c] : a.components()) comps.push_back(Json::array({d, to_json(c)}));
    return Json{{"components", comps}};
}

namespace detail {

template <class Coeff, class Reader>
Graded<Coeff> graded_from_json(const Json& j, Reader read) {
    const Json& comps = field(j, "components");
    if (!comps.is_array()) throw JsonFormatError("\"components\" must be an array");
    Graded<Coeff> r;
    for (const auto& c : comps) {
        if (!c.is_array() || c.size() != 2) throw JsonFormatError("component must be [degree, coeff]");
        r.add_component(integer_field(c[0]), read(c[1]));
    }
    return r;
}

}  // namespace detail

inline WeylElement weyl_from_json(const Json& j) { return detail::graded_from_json<PolyH>(j, poly_from_json); }
inline BElement b_from_json(const Json& j) { return detail::graded_from_json<RatFuncH>(j, ratfunc_from_json); }

inline Json to_json(const AutoGen& g) {
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PhiX>)
                return Json{{"gen", "PhiX"}, {"n", v.n}, {"lambda", to_json(v.lambda)}};
            else if constexpr (std::is_same_v<T, PhiY>)
                return Json{{"gen", "PhiY"}, {"n", v.n}, {"lambda", to_json(v.lambda)}};
            else if constexpr (std::is_same_v<T, Torus>)
                return Json{{"gen", "Torus"}, {"mu", to_json(v.mu)}};
            else if constexpr (std::is_same_v<T, Translate>)
                return Json{{"gen", "Translate"}, {"c", to_json(v.c)}, {"d", to_json(v.d)}};
            else
                return Json{{"gen", "Xi"}};
        },
        g);
}

inline AutoGen autogen_from_json(const Json& j) {
    const Json& kind = detail::field(j, "gen");
    if (!kind.is_string()) throw JsonFormatError("\"gen\" must be a string");
    const std::string name = kind.get<std::string>();
    auto exponent = [&]() {
        const long n = detail::integer_field(detail::field(j, "n"));
        if (n < 1) throw JsonFormatError("generator exponent must be >= 1");
        return static_cast<unsigned>(n);
    };
    if (name == "PhiX") return PhiX{exponent(), rat_from_json(detail::field(j, "lambda"))};
    if (name == "PhiY") return PhiY{exponent(), rat_from_json(detail::field(j, "lambda"))};
    if (name == "Torus") {
        Rat mu = rat_from_json(detail::field(j, "mu"));
        if (mu.is_zero()) throw JsonFormatError("torus parameter must be nonzero");
        return Torus{mu};
    }
    if (name == "Translate")
        return Translate{rat_from_json(detail::field(j, "c")), rat_from_json(detail::field(j, "d"))};
    if (name == "Xi") return Xi{};
    throw JsonFormatError("unknown generator \"" + name + "\"");
}

inline Json to_json(const AutoWord& w) {
    Json gens = Json::array();
    for (const auto& g : w.generators) gens.push_back(to_json(g));
    return Json{{"word", gens}};
}

inline AutoWord autoword_from_json(const Json& j) {
    const Json& gens = detail::field(j, "word");
    if (!gens.is_array()) throw JsonFormatError("\"word\" must be an array");
    AutoWord w;
    for (const auto& g : gens) w.then(autogen_from_json(g));
    return w;
}

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw JsonFormatError(e.what());
    }
}

}  // namespace weyl
