#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace tqmzv {

// Arbitrary-precision rational, always stored in canonical form
// (reduced, positive denominator). Thin value wrapper around GMP's
// mpq_class so the rest of the library never touches GMP directly.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Parses "num" or "num/den" with optional leading '-'. Throws
    // std::invalid_argument on malformed input or zero denominator.
    static Rational parse(const std::string& s);

    static Rational binomial(unsigned long n, unsigned long k);

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sgn() const { return ::sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational pow(unsigned long e) const;
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    double to_double() const { return v_.get_d(); }

    // Minimal form: "5", "-5", "5/2".
    std::string str() const;

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tqmzv
