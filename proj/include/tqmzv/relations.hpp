#pragma once

#include "tqmzv/nc_poly.hpp"
#include "tqmzv/qseries.hpp"
#include "tqmzv/word.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tqmzv {

// Where two sides first disagree. qPower >= 0 locates a q-coefficient
// mismatch; qPower == -1 flags a symbolic (word-level) mismatch, with the
// offending sides rendered as strings.
struct FirstDiff {
    int q_power = 0;
    nlohmann::json lhs;
    nlohmann::json rhs;
};

struct VerificationReport {
    std::string relation;
    nlohmann::json params;
    bool pass = false;
    std::optional<FirstDiff> first_diff;

    // {"relation", "params", "status": "pass"|"fail", "firstDiff": {...}|null}
    nlohmann::json to_json() const;
    std::string to_json_line() const;
};

VerificationReport series_report(std::string relation, nlohmann::json params,
                                 const QSeries& lhs, const QSeries& rhs);
VerificationReport symbolic_report(std::string relation, nlohmann::json params,
                                   const NcPoly& lhs, const NcPoly& rhs);

// S^{-1}(y^m) = (-t x + y - h t)^{m-1} y, the interpolated y-power.
NcPoly interpolated_y_power(int m);

// Quadratic family: sum over i+j=m of Z(phit(v) tcast p_i) Z(phit(w) tcast p_j)
// against -Z(phit(Sinv(S(v) * S(w))) tcast p_m) with the plain harmonic
// product inside. m=1 has an empty left side.
VerificationReport verify_kawashima(int m, const NcPoly& v, const NcPoly& w, int order);

// Cyclic sum formula by direct two-sided series evaluation.
VerificationReport verify_cyclic_sum(const Index& idx, int order);
// Same statement via the kernel element: the rho-image must evaluate to zero,
// and the operator route must match the expanded form symbolically.
VerificationReport verify_cyclic_sum_symbolic(const Index& idx, int order);

// Derivation relation: z_eval(Sinv d1 S (word)) = 0, plus the expanded
// index-level form (merge sums ranging i <= l-1).
VerificationReport verify_hoffman(const Index& idx, int order);

// rho_{n,t}(w) annihilates under evaluation, for w ending in y, not a y-power.
VerificationReport verify_kernel(const Word& w, int n, int order);

// Exhaustive symbolic identity grids, one report per family. Families with
// three or more free quantified objects run words to max_weight - 1.
std::vector<VerificationReport> verify_lemma_suite(int max_weight);

}  // namespace tqmzv
