#pragma once

#include "tqmzv/rational.hpp"

#include <map>
#include <string>

namespace tqmzv {

// Exponent pair of a monomial h^h_deg * t^t_deg. Ordered by total degree,
// then h-degree, so term order is canonical for printing and serialization.
struct HTExp {
    int h = 0;
    int t = 0;

    friend bool operator==(const HTExp& a, const HTExp& b) {
        return a.h == b.h && a.t == b.t;
    }
    friend bool operator<(const HTExp& a, const HTExp& b) {
        if (a.h + a.t != b.h + b.t) return a.h + a.t < b.h + b.t;
        return a.h < b.h;
    }
};

// Element of the coefficient ring Q[h,t] (h stands for hbar everywhere in
// text I/O). Sparse map, no zero coefficients stored.
class CoefPoly {
public:
    CoefPoly() = default;
    CoefPoly(long n) { insert({0, 0}, Rational(n)); }
    CoefPoly(const Rational& r) { insert({0, 0}, r); }

    static CoefPoly h() { return monomial(Rational(1), 1, 0); }
    static CoefPoly t() { return monomial(Rational(1), 0, 1); }
    static CoefPoly monomial(const Rational& r, int deg_h, int deg_t);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const { return is_constant() && constant_value().is_one(); }
    // Pre: is_constant(). The rational value of a constant polynomial.
    Rational constant_value() const;

    const std::map<HTExp, Rational>& terms() const { return terms_; }
    int max_h_deg() const;
    int max_t_deg() const;

    CoefPoly operator-() const;
    CoefPoly& operator+=(const CoefPoly& o);
    CoefPoly& operator-=(const CoefPoly& o);
    CoefPoly& operator*=(const CoefPoly& o) { *this = *this * o; return *this; }
    CoefPoly& operator*=(const Rational& r);

    friend CoefPoly operator+(CoefPoly a, const CoefPoly& b) { return a += b; }
    friend CoefPoly operator-(CoefPoly a, const CoefPoly& b) { return a -= b; }
    friend CoefPoly operator*(const CoefPoly& a, const CoefPoly& b);
    friend CoefPoly operator*(CoefPoly a, const Rational& r) { return a *= r; }
    friend CoefPoly operator*(const Rational& r, CoefPoly a) { return a *= r; }

    friend bool operator==(const CoefPoly& a, const CoefPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const CoefPoly& a, const CoefPoly& b) {
        return !(a == b);
    }

    CoefPoly pow(unsigned e) const;

    Rational eval(const Rational& h_val, const Rational& t_val) const;
    // Substitute t := value, keeping h symbolic (and vice versa).
    CoefPoly subst_t(const Rational& t_val) const;
    CoefPoly subst_h(const Rational& h_val) const;

    // "0", "1", "3/2*h^1*t^2", "1 - 2*t^1". Rational part always printed.
    std::string str() const;

private:
    void insert(const HTExp& e, const Rational& r);

    std::map<HTExp, Rational> terms_;
};

}  // namespace tqmzv
