#pragma once

#include "tqmzv/coef_poly.hpp"
#include "tqmzv/word.hpp"

#include <map>
#include <string>

namespace tqmzv {

// Length-lexicographic word order: canonical term order for printing.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Element of H_{h,t}: finite Q[h,t]-combination of words. Sparse map with
// eager zero-pruning, so equality is structural equality.
class NcPoly {
public:
    using TermMap = std::map<Word, CoefPoly, WordOrder>;

    NcPoly() = default;

    static NcPoly unit() { return from_word(Word{}); }
    static NcPoly from_word(const Word& w);
    static NcPoly from_letter(char c) { return from_word(Word(1, c)); }
    // z_k = x^{k-1}y, k >= 1.
    static NcPoly z(int k) { return from_word(word_from_index({k})); }
    static NcPoly from_index(const Index& idx) { return from_word(word_from_index(idx)); }
    static NcPoly scalar(const CoefPoly& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    CoefPoly coeff(const Word& w) const;

    void add_term(const Word& w, const CoefPoly& c);

    NcPoly operator-() const;
    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);

    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    // Concatenation product of H_{h,t}, bilinear over Q[h,t].
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);

    NcPoly& operator*=(const NcPoly& o) { *this = *this * o; return *this; }

    NcPoly scaled(const CoefPoly& c) const;
    NcPoly scaled(const Rational& r) const { return scaled(CoefPoly(r)); }

    // Apply f to every coefficient (dropping resulting zeros), e.g. a
    // t-specialization.
    template <typename F>
    NcPoly map_coeffs(F&& f) const {
        NcPoly p;
        for (const auto& [w, c] : terms_) p.add_term(w, f(c));
        return p;
    }

    friend bool operator==(const NcPoly& a, const NcPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

    int max_weight() const;
    int max_depth() const;
    bool all_words_h1() const;
    bool all_words_h0() const;
    // True when every word is a single z-letter (the submodule spanned by A).
    bool all_words_single_z() const;

    // "xyy + 1*t^1*xxy + 1*h^1*t^1*xy"; "0" for zero; unit word prints "1".
    std::string str() const;

private:
    TermMap terms_;
};

}  // namespace tqmzv
