#pragma once

#include "tqmzv/coef_poly.hpp"
#include "tqmzv/tpoly.hpp"

#include <string>
#include <vector>

namespace tqmzv {

// Truncated power series in q over Q[t]: exact modulo q^{N+1}. Mixing two
// series of different order truncates to the smaller one.
class QSeries {
public:
    explicit QSeries(int order) {
        if (order < 0) throw std::invalid_argument("QSeries: negative order");
        coeffs_.resize(static_cast<std::size_t>(order) + 1);
    }

    static QSeries constant(const TPoly& c, int order);
    // (1-q)^k, k >= 0, exact binomial expansion truncated.
    static QSeries one_minus_q_pow(int k, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const;

    const TPoly& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    void set_coeff(int n, TPoly c) { coeffs_.at(static_cast<std::size_t>(n)) = std::move(c); }
    void add_coeff(int n, const TPoly& c) { coeffs_.at(static_cast<std::size_t>(n)) += c; }

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    QSeries scaled(const TPoly& c) const;
    QSeries truncated(int order) const;

    QSeries subst_t(const Rational& t_val) const;
    double eval_double(double q, double t) const;

    // Equal iff same order and identical coefficients.
    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    // First power where the two series differ, ignoring orders beyond the
    // common one; -1 if they agree.
    static int first_difference(const QSeries& a, const QSeries& b);

    // "q + q^2 - q^3 + 2*q^4", multi-term t-coefficients parenthesized.
    std::string str() const;

private:
    std::vector<TPoly> coeffs_;
};

// Substitute h -> (1-q) into a Q[h,t]-coefficient, producing the exact
// polynomial (a1-truncated series) in q over Q[t].
QSeries qseries_from_coef(const CoefPoly& c, int order);

}  // namespace tqmzv
