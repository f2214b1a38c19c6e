#include "dmf/serialize.hpp"

namespace dmf {

json to_json(const Poly& p) {
    json out = json::array();
    for (auto c : p.c) out.push_back(int(c));
    return out;
}

json to_json(const Rat& c) {
    return json{{"num", to_json(c.num)}, {"den", to_json(c.den)}};
}

json to_json(const Monomial& m) {
    json g = json::array();
    for (auto e : m.gexp) g.push_back(e);
    return json{{"g", g}, {"delta", m.dexp}};
}

json to_json(const CoefficientElement& c) {
    json out = json::array();
    for (const auto& [m, v] : c.terms()) {
        out.push_back(json{{"monomial", to_json(m)},
                           {"num", to_json(v.num)},
                           {"den", to_json(v.den)}});
    }
    return out;
}

json to_json(const TruncatedSeries& f) {
    json terms = json::array();
    for (const auto& [n, c] : f.terms())
        terms.push_back(json{{"n", n}, {"coeff", to_json(c)}});
    return json{{"prec", f.prec()}, {"terms", terms}};
}

Poly poly_from_json(const FieldSpec& F, const json& j) {
    Poly p;
    for (const auto& v : j) p.c.push_back(F.element(v.get<int>()));
    poly_normalize(p);
    return p;
}

Rat rat_from_json(const FieldSpec& F, const json& j) {
    return rat_make(F, poly_from_json(F, j.at("num")), poly_from_json(F, j.at("den")));
}

Monomial monomial_from_json(const RingSpec& spec, const json& j) {
    Monomial m;
    for (const auto& v : j.at("g")) m.gexp.push_back(v.get<std::int32_t>());
    if (int(m.gexp.size()) != spec.ngens())
        throw std::invalid_argument("monomial g-exponent count mismatch");
    m.dexp = j.at("delta").get<std::int64_t>();
    return m;
}

CoefficientElement coeff_from_json(const RingSpec& spec, const json& j) {
    CoefficientElement c(spec);
    for (const auto& term : j) {
        Monomial m = monomial_from_json(spec, term.at("monomial"));
        Rat v = rat_make(spec.field(), poly_from_json(spec.field(), term.at("num")),
                         poly_from_json(spec.field(), term.at("den")));
        c.add_term(m, v);
    }
    return c;
}

TruncatedSeries series_from_json(const RingSpec& spec, const json& j) {
    TruncatedSeries f(spec, j.at("prec").get<long long>());
    for (const auto& term : j.at("terms"))
        f.add_coeff(term.at("n").get<long long>(), coeff_from_json(spec, term.at("coeff")));
    return f;
}

}  // namespace dmf
