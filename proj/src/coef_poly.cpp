#include "tqmzv/coef_poly.hpp"

#include <stdexcept>

namespace tqmzv {

void CoefPoly::insert(const HTExp& e, const Rational& r) {
    if (r.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, r);
    if (!fresh) {
        it->second += r;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CoefPoly CoefPoly::monomial(const Rational& r, int deg_h, int deg_t) {
    if (deg_h < 0 || deg_t < 0) throw std::invalid_argument("CoefPoly: negative exponent");
    CoefPoly p;
    p.insert({deg_h, deg_t}, r);
    return p;
}

bool CoefPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == HTExp{0, 0});
}

Rational CoefPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("CoefPoly: not a constant");
    return terms_.begin()->second;
}

int CoefPoly::max_h_deg() const {
    int d = 0;
    for (const auto& [e, r] : terms_) d = std::max(d, e.h);
    return d;
}

int CoefPoly::max_t_deg() const {
    int d = 0;
    for (const auto& [e, r] : terms_) d = std::max(d, e.t);
    return d;
}

CoefPoly CoefPoly::operator-() const {
    CoefPoly p;
    for (const auto& [e, r] : terms_) p.terms_.emplace(e, -r);
    return p;
}

CoefPoly& CoefPoly::operator+=(const CoefPoly& o) {
    for (const auto& [e, r] : o.terms_) insert(e, r);
    return *this;
}

CoefPoly& CoefPoly::operator-=(const CoefPoly& o) {
    for (const auto& [e, r] : o.terms_) insert(e, -r);
    return *this;
}

CoefPoly& CoefPoly::operator*=(const Rational& r) {
    if (r.is_zero()) {
        terms_.clear();
    } else {
        for (auto& [e, c] : terms_) c *= r;
    }
    return *this;
}

CoefPoly operator*(const CoefPoly& a, const CoefPoly& b) {
    CoefPoly p;
    for (const auto& [ea, ra] : a.terms_)
        for (const auto& [eb, rb] : b.terms_)
            p.insert({ea.h + eb.h, ea.t + eb.t}, ra * rb);
    return p;
}

CoefPoly CoefPoly::pow(unsigned e) const {
    CoefPoly r(1);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
}

Rational CoefPoly::eval(const Rational& h_val, const Rational& t_val) const {
    Rational acc(0);
    for (const auto& [e, r] : terms_)
        acc += r * h_val.pow(static_cast<unsigned long>(e.h)) *
               t_val.pow(static_cast<unsigned long>(e.t));
    return acc;
}

CoefPoly CoefPoly::subst_t(const Rational& t_val) const {
    CoefPoly p;
    for (const auto& [e, r] : terms_)
        p.insert({e.h, 0}, r * t_val.pow(static_cast<unsigned long>(e.t)));
    return p;
}

CoefPoly CoefPoly::subst_h(const Rational& h_val) const {
    CoefPoly p;
    for (const auto& [e, r] : terms_)
        p.insert({0, e.t}, r * h_val.pow(static_cast<unsigned long>(e.h)));
    return p;
}

std::string CoefPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, r] : terms_) {
        Rational a = r;
        if (first) {
            first = false;
        } else if (a.sgn() < 0) {
            out += " - ";
            a = -a;
        } else {
            out += " + ";
        }
        out += a.str();
        if (e.h > 0) out += "*h^" + std::to_string(e.h);
        if (e.t > 0) out += "*t^" + std::to_string(e.t);
    }
    return out;
}

}  // namespace tqmzv
