#include "tqmzv/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace tqmzv {

QSeries QSeries::constant(const TPoly& c, int order) {
    QSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

QSeries QSeries::one_minus_q_pow(int k, int order) {
    if (k < 0) throw std::invalid_argument("one_minus_q_pow: negative exponent");
    QSeries s(order);
    const int top = std::min(k, order);
    for (int r = 0; r <= top; ++r) {
        Rational c = Rational::binomial(static_cast<unsigned long>(k),
                                        static_cast<unsigned long>(r));
        if (r % 2 != 0) c = -c;
        s.coeffs_[static_cast<std::size_t>(r)] = TPoly(c);
    }
    return s;
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const TPoly& c) { return c.is_zero(); });
}

QSeries QSeries::operator-() const {
    QSeries s(order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) s.coeffs_[n] = -coeffs_[n];
    return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    if (o.order() < order()) *this = truncated(o.order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    if (o.order() < order()) *this = truncated(o.order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries s = a;
    s += b;
    return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries s = a;
    s -= b;
    return s;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    QSeries s(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j).is_zero()) continue;
            s.coeffs_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
    }
    return s;
}

QSeries QSeries::scaled(const TPoly& c) const {
    QSeries s(order());
    if (c.is_zero()) return s;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) s.coeffs_[n] = coeffs_[n] * c;
    return s;
}

QSeries QSeries::truncated(int new_order) const {
    if (new_order >= order()) return *this;
    QSeries s(new_order);
    for (int n = 0; n <= new_order; ++n) s.coeffs_[static_cast<std::size_t>(n)] = coeff(n);
    return s;
}

QSeries QSeries::subst_t(const Rational& t_val) const {
    QSeries s(order());
    for (std::size_t n = 0; n < coeffs_.size(); ++n)
        s.coeffs_[n] = TPoly(coeffs_[n].eval(t_val));
    return s;
}

double QSeries::eval_double(double q, double t) const {
    double acc = 0.0;
    double qn = 1.0;
    for (const TPoly& c : coeffs_) {
        double cv = 0.0;
        double tk = 1.0;
        int prev = 0;
        for (const auto& [deg, r] : c.terms()) {
            for (; prev < deg; ++prev) tk *= t;
            cv += r.to_double() * tk;
        }
        acc += cv * qn;
        qn *= q;
    }
    return acc;
}

int QSeries::first_difference(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
        if (a.coeff(i) != b.coeff(i)) return i;
    return -1;
}

std::string QSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        const TPoly& c = coeffs_[n];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        const bool multi = c.terms().size() > 1;
        bool negated = false;
        if (!multi && cs.size() > 1 && cs[0] == '-') {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) out << "-";
            first = false;
        } else {
            out << (negated ? " - " : " + ");
        }
        if (n == 0) {
            out << (multi ? "(" + cs + ")" : cs);
            continue;
        }
        std::string qpow = n == 1 ? "q" : "q^" + std::to_string(n);
        if (cs == "1") {
            out << qpow;
        } else if (multi) {
            out << "(" << cs << ")*" << qpow;
        } else {
            out << cs << "*" << qpow;
        }
    }
    if (first) return "0";
    return out.str();
}

QSeries qseries_from_coef(const CoefPoly& c, int order) {
    QSeries s(order);
    for (const auto& [exp, r] : c.terms()) {
        QSeries mono = QSeries::one_minus_q_pow(exp.h, order);
        s += mono.scaled(TPoly::monomial(r, exp.t));
    }
    return s;
}

}  // namespace tqmzv
