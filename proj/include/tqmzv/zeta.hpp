#pragma once

#include "tqmzv/nc_poly.hpp"
#include "tqmzv/qseries.hpp"
#include "tqmzv/word.hpp"

#include <optional>
#include <string>

namespace tqmzv {

// (1-q)^k / (1-q^m)^k expanded exactly to the given order.
QSeries inv_qbracket_pow(int m, int k, int order);

// Sum over strictly decreasing m_1 > ... > m_l >= 1 of
// prod q^{(k_i-1) m_i} / [m_i]^{k_i}, truncated exactly. Requires k_1 >= 2;
// the leading factor then bounds m_1 <= order, so no tail is lost.
QSeries zeta_q(const Index& idx, int order);

// Weakly decreasing variant (m_1 >= ... >= m_l >= 1).
QSeries zeta_q_star(const Index& idx, int order);

// Interpolated value by direct enumeration of the 3^{l-1} slot fillers:
// keep the separator, merge (factor t), or merge-minus-one (factor t(1-q)).
QSeries zeta_q_t_direct(const Index& idx, int order);

// Evaluation of an x..y-word combination via plain zeta_q on each word, with
// h -> 1-q folded into the series. Constant terms pass through.
QSeries z_eval_base(const NcPoly& p, int order);

// The interpolated evaluation: z_eval_base after the merge map. Normative.
QSeries z_eval(const NcPoly& p, int order);

// Same value computed word-by-word through zeta_q_t_direct.
QSeries z_eval_direct(const NcPoly& p, int order);

// Floating summation of the defining series; terminates once the outer
// summand drops below eps (with a hard iteration cap).
double numeric_zeta_q(const Index& idx, double q, double eps);
double numeric_zeta_q_star(const Index& idx, double q, double eps);
// Interpolated value at (q, t) via the filler expansion.
double numeric_zeta_q_t(const Index& idx, double q, double t, double eps);
// S-route float evaluation of an x..y-word combination with h = 1-q.
double numeric_z_eval(const NcPoly& p, double q, double t, double eps);

// Advisory on-disk memo for zeta_q results, one record per line. Never a
// hard dependency: unreadable entries are recomputed. Empty path disables.
void set_cache_dir(const std::string& dir);
std::optional<std::string> cache_dir();

}  // namespace tqmzv
