#pragma once

#include "tqmzv/rational.hpp"

#include <map>
#include <string>

namespace tqmzv {

// Polynomial in t over Q; the coefficient ring of evaluated series.
// Sparse, no zero coefficients stored.
class TPoly {
public:
    TPoly() = default;
    TPoly(long n) { insert(0, Rational(n)); }
    TPoly(const Rational& r) { insert(0, r); }

    static TPoly monomial(const Rational& r, int deg);

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Rational>& terms() const { return terms_; }
    int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    TPoly operator-() const;
    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly& operator*=(const Rational& r);

    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend TPoly operator*(TPoly a, const Rational& r) { return a *= r; }

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

    Rational eval(const Rational& t_val) const;
    TPoly subst_t(const Rational& t_val) const { return TPoly(eval(t_val)); }

    // "0", "2", "1 - 2*t^1".
    std::string str() const;

private:
    void insert(int deg, const Rational& r);

    std::map<int, Rational> terms_;
};

}  // namespace tqmzv
