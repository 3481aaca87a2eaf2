#include "tqmzv/rational.hpp"

#include <cctype>
#include <ostream>

namespace tqmzv {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '-' || s[i] == '+') {
        neg = (s[i] == '-');
        ++i;
    }
    auto take_digits = [&](std::string& out) {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
        if (i == start) throw std::invalid_argument("Rational: bad digits in '" + s + "'");
    };
    std::string num, den;
    take_digits(num);
    if (i < s.size()) {
        if (s[i] != '/') throw std::invalid_argument("Rational: bad char in '" + s + "'");
        ++i;
        take_digits(den);
        if (i != s.size()) throw std::invalid_argument("Rational: trailing data in '" + s + "'");
    } else {
        den = "1";
    }
    mpq_class v(num + "/" + den);
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    v.canonicalize();
    if (neg) v = -v;
    return Rational(v);
}

Rational Rational::binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

Rational Rational::pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace tqmzv
