#include "tqmzv/relations.hpp"

#include "tqmzv/cyclic.hpp"
#include "tqmzv/enumerate.hpp"
#include "tqmzv/maps.hpp"
#include "tqmzv/products.hpp"
#include "tqmzv/serialize.hpp"
#include "tqmzv/zeta.hpp"

#include <stdexcept>
#include <utility>

namespace tqmzv {

namespace {

void require_hy_poly(const NcPoly& p, const char* where) {
    for (const auto& [w, c] : p.terms())
        if (w.empty() || w.back() != 'y')
            throw std::domain_error(std::string(where) + ": argument must end in y");
}

void require_index(const Index& idx, const char* where) {
    if (idx.empty()) throw std::domain_error(std::string(where) + ": empty index");
    for (int k : idx)
        if (k < 1) throw std::domain_error(std::string(where) + ": index parts must be >= 1");
}

// Aggregates one exhaustive grid into a single report; the first mismatch is
// kept along with the instance that produced it.
class FamilyReport {
public:
    FamilyReport(std::string relation, nlohmann::json params)
        : relation_(std::move(relation)), params_(std::move(params)) {}

    void check(const NcPoly& lhs, const NcPoly& rhs, const nlohmann::json& instance) {
        ++instances_;
        if (failed_ || lhs == rhs) return;
        failed_ = true;
        diff_ = FirstDiff{-1, lhs.str(), rhs.str()};
        params_["failedInstance"] = instance;
    }

    VerificationReport finish() {
        params_["instances"] = instances_;
        VerificationReport rep;
        rep.relation = relation_;
        rep.params = params_;
        rep.pass = !failed_;
        if (failed_) rep.first_diff = diff_;
        return rep;
    }

private:
    std::string relation_;
    nlohmann::json params_;
    bool failed_ = false;
    FirstDiff diff_;
    long instances_ = 0;
};

TPoly t_monic(int deg) { return TPoly::monomial(Rational(1), deg); }

// 1 - t
TPoly one_minus_t() { return TPoly(1) - t_monic(1); }

// t(t-1) = t^2 - t
TPoly t_times_t_minus_one() { return t_monic(2) - t_monic(1); }

NcPoly subst_t_zero(const NcPoly& p) {
    return p.map_coeffs([](const CoefPoly& c) { return c.subst_t(Rational(0)); });
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["relation"] = relation;
    j["params"] = params;
    j["status"] = pass ? "pass" : "fail";
    if (first_diff) {
        j["firstDiff"] = {{"qPower", first_diff->q_power},
                          {"lhs", first_diff->lhs},
                          {"rhs", first_diff->rhs}};
    } else {
        j["firstDiff"] = nullptr;
    }
    return j;
}

std::string VerificationReport::to_json_line() const { return to_json().dump(); }

VerificationReport series_report(std::string relation, nlohmann::json params,
                                 const QSeries& lhs, const QSeries& rhs) {
    VerificationReport rep;
    rep.relation = std::move(relation);
    rep.params = std::move(params);
    const int diff = QSeries::first_difference(lhs, rhs);
    rep.pass = diff < 0;
    if (!rep.pass)
        rep.first_diff =
            FirstDiff{diff, tpoly_to_json(lhs.coeff(diff)), tpoly_to_json(rhs.coeff(diff))};
    return rep;
}

VerificationReport symbolic_report(std::string relation, nlohmann::json params,
                                   const NcPoly& lhs, const NcPoly& rhs) {
    VerificationReport rep;
    rep.relation = std::move(relation);
    rep.params = std::move(params);
    rep.pass = lhs == rhs;
    if (!rep.pass) rep.first_diff = FirstDiff{-1, lhs.str(), rhs.str()};
    return rep;
}

NcPoly interpolated_y_power(int m) {
    if (m < 1) throw std::domain_error("interpolated_y_power: need m >= 1");
    const CoefPoly t = CoefPoly::t();
    NcPoly base = NcPoly::from_letter('x').scaled(-t) + NcPoly::from_letter('y') +
                  NcPoly::scalar(-(CoefPoly::h() * t));
    NcPoly acc = NcPoly::unit();
    for (int i = 1; i < m; ++i) acc *= base;
    return acc * NcPoly::from_letter('y');
}

VerificationReport verify_kawashima(int m, const NcPoly& v, const NcPoly& w, int order) {
    if (m < 1) throw std::domain_error("verify_kawashima: need m >= 1");
    require_hy_poly(v, "verify_kawashima");
    require_hy_poly(w, "verify_kawashima");

    const NcPoly fv = phi_t_map(v);
    const NcPoly fw = phi_t_map(w);
    QSeries lhs(order);
    for (int i = 1; i <= m - 1; ++i) {
        const int j = m - i;
        lhs += z_eval(t_circledast(fv, interpolated_y_power(i)), order) *
               z_eval(t_circledast(fw, interpolated_y_power(j)), order);
    }

    const NcPoly mixed = s_inverse(harmonic_star(s_map(v), s_map(w)));
    const QSeries rhs =
        -z_eval(t_circledast(phi_t_map(mixed), interpolated_y_power(m)), order);

    nlohmann::json params{{"m", m}, {"v", v.str()}, {"w", w.str()}, {"N", order}};
    return series_report("kawashima", std::move(params), lhs, rhs);
}

VerificationReport verify_cyclic_sum(const Index& idx, int order) {
    require_index(idx, "verify_cyclic_sum");
    if (is_all_ones(idx))
        throw std::domain_error("verify_cyclic_sum: all-ones index is excluded");
    const int l = static_cast<int>(idx.size());
    const int k = index_weight(idx);

    QSeries lhs(order);
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j <= idx[static_cast<std::size_t>(i)] - 2; ++j) {
            Index rot;
            rot.push_back(idx[static_cast<std::size_t>(i)] - j);
            for (int d = 1; d < l; ++d)
                rot.push_back(idx[static_cast<std::size_t>((i + d) % l)]);
            rot.push_back(j + 1);
            lhs += zeta_q_t_direct(rot, order);
        }
    }

    QSeries heads(order);
    for (int i = 0; i < l; ++i) {
        Index rot;
        rot.push_back(idx[static_cast<std::size_t>(i)] + 1);
        for (int d = 1; d < l; ++d)
            rot.push_back(idx[static_cast<std::size_t>((i + d) % l)]);
        heads += zeta_q_t_direct(rot, order);
    }
    QSeries rhs = heads.scaled(one_minus_t());

    QSeries tail(order);
    for (int i = 0; i <= l; ++i) {
        const Rational c = Rational::binomial(static_cast<unsigned long>(l),
                                              static_cast<unsigned long>(i)) *
                           Rational(k - i);
        QSeries term = zeta_q_t_direct({k - i + 1}, order).scaled(TPoly(c));
        if (i > 0) term = term * QSeries::one_minus_q_pow(i, order);
        tail += term;
    }
    rhs += tail.scaled(t_monic(l));

    nlohmann::json params{{"index", index_str(idx)}, {"N", order}, {"route", "direct"}};
    return series_report("csf-direct", std::move(params), lhs, rhs);
}

VerificationReport verify_cyclic_sum_symbolic(const Index& idx, int order) {
    require_index(idx, "verify_cyclic_sum_symbolic");
    if (is_all_ones(idx))
        throw std::domain_error("verify_cyclic_sum_symbolic: all-ones index is excluded");

    const NcPoly kern = csf_kernel_element(idx);
    const NcPoly expl = csf_kernel_explicit(idx);
    nlohmann::json params{{"index", index_str(idx)}, {"N", order}, {"route", "kernel"}};

    if (kern != expl) {
        VerificationReport rep;
        rep.relation = "csf-kernel";
        params["failedCheck"] = "operator-vs-expanded";
        rep.params = std::move(params);
        rep.pass = false;
        rep.first_diff = FirstDiff{-1, kern.str(), expl.str()};
        return rep;
    }
    return series_report("csf-kernel", std::move(params), z_eval(kern, order),
                         QSeries(order));
}

VerificationReport verify_hoffman(const Index& idx, int order) {
    require_index(idx, "verify_hoffman");
    if (!is_admissible(idx)) throw std::domain_error("verify_hoffman: index must be admissible");
    const int l = static_cast<int>(idx.size());

    nlohmann::json params{{"index", index_str(idx)},
                          {"N", order},
                          {"expansionReading", "merge sums range i <= l-1"}};

    const NcPoly kern = s_inverse(d1_derivation(s_map(NcPoly::from_index(idx))));
    const QSeries kern_val = z_eval(kern, order);
    if (!kern_val.is_zero()) {
        params["failedCheck"] = "kernel";
        return series_report("hoffman", std::move(params), kern_val, QSeries(order));
    }

    auto at = [&](int i) { return idx[static_cast<std::size_t>(i)]; };

    QSeries lhs(order);
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j <= at(i) - 2; ++j) {
            Index split;
            for (int d = 0; d < i; ++d) split.push_back(at(d));
            split.push_back(at(i) - j);
            split.push_back(j + 1);
            for (int d = i + 1; d < l; ++d) split.push_back(at(d));
            lhs += zeta_q_t_direct(split, order);
        }
    }

    QSeries rhs(order);
    for (int i = 0; i < l; ++i) {
        Index succ = idx;
        succ[static_cast<std::size_t>(i)] += 1;
        const int delta = i == l - 1 ? 1 : 0;
        const TPoly coeff = TPoly(1) + t_monic(1) * Rational(at(i) - 2 + delta);
        rhs += zeta_q_t_direct(succ, order).scaled(coeff);
    }
    for (int i = 0; i + 1 < l; ++i) {
        Index merged;
        for (int d = 0; d < i; ++d) merged.push_back(at(d));
        merged.push_back(at(i) + at(i + 1) + 1);
        for (int d = i + 2; d < l; ++d) merged.push_back(at(d));
        rhs += zeta_q_t_direct(merged, order).scaled(t_times_t_minus_one());
    }
    QSeries qpart(order);
    for (int i = 0; i < l; ++i)
        qpart += zeta_q_t_direct(idx, order).scaled(t_monic(1) * Rational(at(i) - 1));
    for (int i = 0; i + 1 < l; ++i) {
        Index merged;
        for (int d = 0; d < i; ++d) merged.push_back(at(d));
        merged.push_back(at(i) + at(i + 1));
        for (int d = i + 2; d < l; ++d) merged.push_back(at(d));
        qpart += zeta_q_t_direct(merged, order).scaled(t_times_t_minus_one());
    }
    rhs += qpart * QSeries::one_minus_q_pow(1, order);

    return series_report("hoffman", std::move(params), lhs, rhs);
}

VerificationReport verify_kernel(const Word& w, int n, int order) {
    if (!is_hcheck1_word(w))
        throw std::domain_error("verify_kernel: word must end in y and not be a y-power");
    if (n < 1) throw std::domain_error("verify_kernel: need n >= 1");
    const NcPoly image = rho_map(n, NcPoly::from_word(w));
    nlohmann::json params{{"word", w}, {"n", n}, {"N", order}};
    return series_report("kernel", std::move(params), z_eval(image, order), QSeries(order));
}

std::vector<VerificationReport> verify_lemma_suite(int max_weight) {
    if (max_weight < 2) throw std::domain_error("verify_lemma_suite: need max_weight >= 2");
    const int w1 = max_weight;          // families quantifying at most two words
    const int w3 = max_weight - 1;      // three or more free objects
    const int kmax = 3;                 // z-letter range in the expansion grids
    std::vector<VerificationReport> out;
    const CoefPoly t = CoefPoly::t();
    const CoefPoly h = CoefPoly::h();
    const CoefPoly one_m_t = CoefPoly(1) - t;
    const NcPoly x = NcPoly::from_letter('x');
    const NcPoly y = NcPoly::from_letter('y');

    {
        FamilyReport fam("merge-join-commutes", {{"maxWeight", w1}});
        for (int k = 1; k <= w1; ++k) {
            for (const Word& u : h1_words_up_to(w1)) {
                const NcPoly p = NcPoly::from_word(u);
                fam.check(s_map(circ_action(k, p)), circ_action(k, s_map(p)),
                          {{"k", k}, {"w", u}});
            }
        }
        out.push_back(fam.finish());
    }

    {
        FamilyReport fam("merge-boundary", {{"maxWeight", w1}});
        for (const Word& u : words_filtered(0, w1 - 1, [](const Word&) { return true; })) {
            fam.check(s_map(NcPoly::from_word(u + "y")),
                      gamma_map(NcPoly::from_word(u)) * y, {{"w", u}});
        }
        out.push_back(fam.finish());
    }

    {
        FamilyReport fam("starplus-gamma-left", {{"maxWeight", w3}, {"kMax", kmax}});
        for (int k = 1; k <= kmax; ++k) {
            const NcPoly gk = gamma_map(NcPoly::z(k));
            for (int l = 1; l <= kmax; ++l) {
                const NcPoly zl = NcPoly::z(l);
                const NcPoly join = circ_plus(NcPoly::z(k), zl).scaled(one_m_t);
                for (const Word& vw : hy_words_up_to(w3)) {
                    const NcPoly v = NcPoly::from_word(vw);
                    for (const Word& ww : h1_words_up_to(w3)) {
                        const NcPoly w = NcPoly::from_word(ww);
                        const NcPoly lhs = harmonic_star_plus(gk * v, zl * w);
                        const NcPoly rhs = gk * harmonic_star_plus(v, zl * w) +
                                           zl * harmonic_star_plus(gk * v, w) +
                                           join * harmonic_star_plus(v, w);
                        fam.check(lhs, rhs, {{"k", k}, {"l", l}, {"v", vw}, {"w", ww}});
                    }
                }
            }
        }
        out.push_back(fam.finish());
    }

    {
        FamilyReport fam("starplus-merged-left", {{"maxWeight", w3}, {"kMax", kmax}});
        for (int k = 1; k <= kmax; ++k) {
            const NcPoly gk = gamma_map(NcPoly::z(k));
            for (int l = 1; l <= kmax; ++l) {
                const NcPoly zl = NcPoly::z(l);
                const NcPoly join = circ_plus(NcPoly::z(k), zl).scaled(one_m_t);
                for (const Word& vw : h1_words_up_to(w3)) {
                    const NcPoly v = NcPoly::from_word(vw);
                    const NcPoly sv = s_map(v);
                    const NcPoly szkv = s_map(NcPoly::z(k) * v);
                    for (const Word& ww : h1_words_up_to(w3)) {
                        const NcPoly w = NcPoly::from_word(ww);
                        const NcPoly lhs = harmonic_star_plus(szkv, zl * w);
                        const NcPoly rhs = gk * harmonic_star_plus(sv, zl * w) +
                                           zl * harmonic_star_plus(szkv, w) +
                                           join * harmonic_star_plus(sv, w);
                        fam.check(lhs, rhs, {{"k", k}, {"l", l}, {"v", vw}, {"w", ww}});
                    }
                }
            }
        }
        out.push_back(fam.finish());
    }

    {
        FamilyReport fam("starplus-xpower-left", {{"maxWeight", w3}, {"kMax", kmax}});
        for (int k = 0; k <= kmax; ++k) {
            NcPoly xk = NcPoly::unit();
            for (int i = 0; i < k; ++i) xk *= x;
            for (int l = 1; l <= kmax; ++l) {
                const NcPoly gl = gamma_map(NcPoly::z(l));
                for (const Word& vw : hy_words_up_to(w3)) {
                    const auto [p, rest] = split_leading_z(vw);
                    const NcPoly v = NcPoly::from_word(vw);
                    const NcPoly big_v = NcPoly::from_word(rest);
                    const NcPoly join =
                        circ_plus(NcPoly::z(k + p), NcPoly::z(l)).scaled(one_m_t);
                    for (const Word& ww : hy_words_up_to(w3)) {
                        const NcPoly w = NcPoly::from_word(ww);
                        const NcPoly lhs = harmonic_star_plus(xk * v, gl * w);
                        const NcPoly rhs =
                            NcPoly::z(k + p) * harmonic_star_plus(big_v, gl * w) +
                            gl * harmonic_star_plus(xk * v, w) +
                            join * harmonic_star_plus(big_v, w);
                        fam.check(lhs, rhs,
                                  {{"k", k}, {"l", l}, {"v", vw}, {"w", ww}});
                    }
                }
            }
        }
        out.push_back(fam.finish());
    }

    {
        FamilyReport fam("starplus-gamma-both", {{"maxWeight", w3}, {"kMax", kmax}});
        for (int k = 1; k <= kmax; ++k) {
            const NcPoly gk = gamma_map(NcPoly::z(k));
            NcPoly xk = NcPoly::unit();
            for (int i = 0; i < k; ++i) xk *= x;
            NcPoly xk1 = NcPoly::unit();
            for (int i = 0; i + 1 < k; ++i) xk1 *= x;
            for (int l = 1; l <= kmax; ++l) {
                const NcPoly gl = gamma_map(NcPoly::z(l));
                const NcPoly mid = (xk + xk1.scaled(h)).scaled(-t) * gl +
                                   circ_plus(NcPoly::z(k), NcPoly::z(l)).scaled(one_m_t);
                for (const Word& vw : hy_words_up_to(w3)) {
                    const NcPoly v = NcPoly::from_word(vw);
                    for (const Word& ww : hy_words_up_to(w3)) {
                        const NcPoly w = NcPoly::from_word(ww);
                        const NcPoly lhs = harmonic_star_plus(gk * v, gl * w);
                        const NcPoly rhs = gk * harmonic_star_plus(v, gl * w) +
                                           gl * harmonic_star_plus(gk * v, w) +
                                           mid * harmonic_star_plus(v, w);
                        fam.check(lhs, rhs, {{"k", k}, {"l", l}, {"v", vw}, {"w", ww}});
                    }
                }
            }
        }
        out.push_back(fam.finish());
    }

    {
        FamilyReport fam("tstar-conjugacy", {{"maxWeight", w1}});
        for (const Word& vw : h1_words_up_to(w1)) {
            if (vw.empty()) continue;
            const NcPoly v = NcPoly::from_word(vw);
            const NcPoly sv = s_map(v);
            for (const Word& ww : h1_words_up_to(w1)) {
                if (ww.empty()) continue;
                const NcPoly w = NcPoly::from_word(ww);
                const NcPoly lhs = t_harmonic(v, w);
                const NcPoly rhs = s_inverse(harmonic_star_plus(sv, s_map(w)));
                fam.check(lhs, rhs, {{"v", vw}, {"w", ww}});
            }
        }
        out.push_back(fam.finish());
    }

    {
        FamilyReport fam("rho-interpolation", {{"maxWeight", w1}, {"nMax", 3}});
        const CoefPoly zero(0);
        for (int n = 1; n <= 3; ++n) {
            for (const Word& u : words_filtered(0, w1, [](const Word&) { return true; })) {
                const NcPoly p = NcPoly::from_word(u);
                const NcPoly at_zero = rho_map(n, p, zero);
                const NcPoly composed = s_map(rho_map(n, p));
                fam.check(at_zero, composed, {{"n", n}, {"w", u}, {"form", "rebuilt"}});
                fam.check(subst_t_zero(rho_map(n, p)), at_zero,
                          {{"n", n}, {"w", u}, {"form", "substituted"}});
            }
        }
        out.push_back(fam.finish());
    }

    {
        FamilyReport fam("rho-cyclic-invariance", {{"maxWeight", w1}});
        for (const Word& u : words_filtered(1, w1, [](const Word&) { return true; })) {
            const NcPoly base = rho_map(1, NcPoly::from_word(u));
            fam.check(rho1_closed_form(u), base, {{"w", u}, {"form", "closed"}});
            for (const Word& r : cyclic_rotations(u))
                fam.check(rho_map(1, NcPoly::from_word(r)), base,
                          {{"w", u}, {"rotation", r}});
        }
        out.push_back(fam.finish());
    }

    {
        FamilyReport fam("merge-left-x", {{"maxWeight", w1}});
        for (const Word& u : hy_words_up_to(w1)) {
            const NcPoly p = NcPoly::from_word(u);
            fam.check(s_map(left_mult_x(p)), left_mult_x(s_map(p)), {{"w", u}});
        }
        out.push_back(fam.finish());
    }

    return out;
}

}  // namespace tqmzv
