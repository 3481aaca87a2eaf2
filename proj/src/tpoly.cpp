#include "tqmzv/tpoly.hpp"

#include <stdexcept>

namespace tqmzv {

void TPoly::insert(int deg, const Rational& r) {
    if (r.is_zero()) return;
    auto [it, fresh] = terms_.emplace(deg, r);
    if (!fresh) {
        it->second += r;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TPoly TPoly::monomial(const Rational& r, int deg) {
    if (deg < 0) throw std::invalid_argument("TPoly: negative degree");
    TPoly p;
    p.insert(deg, r);
    return p;
}

TPoly TPoly::operator-() const {
    TPoly p;
    for (const auto& [d, r] : terms_) p.terms_.emplace(d, -r);
    return p;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    for (const auto& [d, r] : o.terms_) insert(d, r);
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    for (const auto& [d, r] : o.terms_) insert(d, -r);
    return *this;
}

TPoly& TPoly::operator*=(const Rational& r) {
    if (r.is_zero()) {
        terms_.clear();
    } else {
        for (auto& [d, c] : terms_) c *= r;
    }
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly p;
    for (const auto& [da, ra] : a.terms_)
        for (const auto& [db, rb] : b.terms_)
            p.insert(da + db, ra * rb);
    return p;
}

Rational TPoly::eval(const Rational& t_val) const {
    Rational acc(0);
    for (const auto& [d, r] : terms_)
        acc += r * t_val.pow(static_cast<unsigned long>(d));
    return acc;
}

std::string TPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, r] : terms_) {
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
        if (d > 0) out += "*t^" + std::to_string(d);
    }
    return out;
}

}  // namespace tqmzv
