#pragma once

#include "tqmzv/nc_poly.hpp"
#include "tqmzv/qseries.hpp"
#include "tqmzv/tpoly.hpp"

#include <json.hpp>

#include <string>

namespace tqmzv {

// [[t_deg, "num/den"], ...]
nlohmann::json tpoly_to_json(const TPoly& p);
TPoly tpoly_from_json(const nlohmann::json& j);

// [{"word": ..., "coeff": [[deg_h, deg_t, "num/den"], ...]}, ...]
nlohmann::json nc_poly_to_json(const NcPoly& p);
NcPoly nc_poly_from_json(const nlohmann::json& j);

// {"N": int, "coeffs": [tpoly, tpoly, ...]} with coeffs[n] the q^n coefficient.
nlohmann::json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const nlohmann::json& j);

// One cache record: "k1,k2,...;N;json(QSeries)".
std::string cache_line(const Index& idx, const QSeries& s);
// Parses a record; returns false (without throwing) on any malformed input.
bool parse_cache_line(const std::string& line, Index& idx, int& order, QSeries& out);

}  // namespace tqmzv
