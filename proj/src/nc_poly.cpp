#include "tqmzv/nc_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace tqmzv {

NcPoly NcPoly::from_word(const Word& w) {
    if (!is_valid_word(w)) throw std::invalid_argument("NcPoly: invalid word '" + w + "'");
    NcPoly p;
    p.terms_.emplace(w, CoefPoly(1));
    return p;
}

NcPoly NcPoly::scalar(const CoefPoly& c) {
    NcPoly p;
    if (!c.is_zero()) p.terms_.emplace(Word{}, c);
    return p;
}

CoefPoly NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? CoefPoly() : it->second;
}

void NcPoly::add_term(const Word& w, const CoefPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NcPoly NcPoly::operator-() const {
    NcPoly p;
    for (const auto& [w, c] : terms_) p.terms_.emplace(w, -c);
    return p;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly p;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_)
            p.add_term(wa + wb, ca * cb);
    return p;
}

NcPoly NcPoly::scaled(const CoefPoly& c) const {
    NcPoly p;
    for (const auto& [w, cw] : terms_) p.add_term(w, c * cw);
    return p;
}

int NcPoly::max_weight() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, word_weight(w));
    return m;
}

int NcPoly::max_depth() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, word_depth(w));
    return m;
}

bool NcPoly::all_words_h1() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return is_h1_word(kv.first); });
}

bool NcPoly::all_words_h0() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return is_h0_word(kv.first); });
}

bool NcPoly::all_words_single_z() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) {
        return is_h1_word(kv.first) && word_depth(kv.first) == 1;
    });
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        CoefPoly cc = c;
        bool single = cc.terms().size() == 1;
        if (first) {
            first = false;
        } else if (single && cc.terms().begin()->second.sgn() < 0) {
            out += " - ";
            cc = -cc;
        } else {
            out += " + ";
        }
        std::string wp = w.empty() ? "1" : w;
        if (cc.is_one()) {
            out += wp;
        } else if (single) {
            out += cc.str() + "*" + wp;
        } else {
            out += "(" + cc.str() + ")*" + wp;
        }
    }
    return out;
}

}  // namespace tqmzv
