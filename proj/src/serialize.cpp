#include "tqmzv/serialize.hpp"

#include "tqmzv/word.hpp"

namespace tqmzv {

nlohmann::json tpoly_to_json(const TPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [deg, c] : p.terms()) arr.push_back({deg, c.str()});
    return arr;
}

TPoly tpoly_from_json(const nlohmann::json& j) {
    TPoly p;
    for (const auto& item : j) {
        int deg = item.at(0).get<int>();
        Rational c = Rational::parse(item.at(1).get<std::string>());
        p += TPoly::monomial(c, deg);
    }
    return p;
}

nlohmann::json nc_poly_to_json(const NcPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [word, coeff] : p.terms()) {
        nlohmann::json cj = nlohmann::json::array();
        for (const auto& [exp, r] : coeff.terms()) cj.push_back({exp.h, exp.t, r.str()});
        arr.push_back({{"word", word}, {"coeff", cj}});
    }
    return arr;
}

NcPoly nc_poly_from_json(const nlohmann::json& j) {
    NcPoly p;
    for (const auto& item : j) {
        Word w = item.at("word").get<std::string>();
        CoefPoly c;
        for (const auto& mono : item.at("coeff")) {
            int dh = mono.at(0).get<int>();
            int dt = mono.at(1).get<int>();
            Rational r = Rational::parse(mono.at(2).get<std::string>());
            c += CoefPoly::monomial(r, dh, dt);
        }
        p.add_term(w, c);
    }
    return p;
}

nlohmann::json qseries_to_json(const QSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(tpoly_to_json(s.coeff(n)));
    return {{"N", s.order()}, {"coeffs", coeffs}};
}

QSeries qseries_from_json(const nlohmann::json& j) {
    int order = j.at("N").get<int>();
    const auto& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != order + 1)
        throw std::invalid_argument("QSeries JSON: coeffs length does not match N");
    QSeries s(order);
    for (int n = 0; n <= order; ++n) s.set_coeff(n, tpoly_from_json(coeffs.at(n)));
    return s;
}

std::string cache_line(const Index& idx, const QSeries& s) {
    return index_str(idx) + ";" + std::to_string(s.order()) + ";" +
           qseries_to_json(s).dump();
}

bool parse_cache_line(const std::string& line, Index& idx, int& order, QSeries& out) {
    auto p1 = line.find(';');
    if (p1 == std::string::npos) return false;
    auto p2 = line.find(';', p1 + 1);
    if (p2 == std::string::npos) return false;
    try {
        idx = index_parse(line.substr(0, p1));
        order = std::stoi(line.substr(p1 + 1, p2 - p1 - 1));
        nlohmann::json j = nlohmann::json::parse(line.substr(p2 + 1));
        out = qseries_from_json(j);
    } catch (const std::exception&) {
        return false;
    }
    return out.order() == order;
}

}  // namespace tqmzv
