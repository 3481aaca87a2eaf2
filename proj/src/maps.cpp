#include "tqmzv/maps.hpp"

#include "tqmzv/products.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace tqmzv {

namespace {

NcPoly s_map_word(const Word& w, const CoefPoly& s) {
    if (w.empty()) return NcPoly::unit();
    if (!is_h1_word(w))
        throw std::domain_error("s_map: word outside H1: '" + w + "'");

    // Keyed by the rendered scalar: s is one of a handful of values per run.
    static thread_local std::map<std::pair<Word, std::string>, NcPoly> memo;
    auto key = std::make_pair(w, s.str());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    auto [k, rest] = split_leading_z(w);
    NcPoly sub = s_map_word(rest, s);
    NcPoly r = NcPoly::z(k) * sub + circ_action(k, sub).scaled(s);
    return memo.emplace(std::move(key), std::move(r)).first->second;
}

}  // namespace

NcPoly subst_letters(const NcPoly& p, const NcPoly& img_x, const NcPoly& img_y) {
    NcPoly out;
    for (const auto& [w, c] : p.terms()) {
        NcPoly prod = NcPoly::unit();
        for (char ch : w) prod *= (ch == 'x') ? img_x : img_y;
        out += prod.scaled(c);
    }
    return out;
}

NcPoly s_map(const NcPoly& p, const CoefPoly& s) {
    NcPoly out;
    for (const auto& [w, c] : p.terms()) out += s_map_word(w, s).scaled(c);
    return out;
}

NcPoly s_inverse(const NcPoly& p, const CoefPoly& s) {
    return s_map(p, -s);
}

NcPoly s_inverse_triangular(const NcPoly& p, const CoefPoly& s) {
    if (!p.all_words_h1())
        throw std::domain_error("s_inverse_triangular: argument outside H1");
    // S = id + R with R strictly depth-decreasing, so iterating
    // v <- p - R(v) reaches the fixed point v = Sinv(p) in at most
    // max_depth+1 steps.
    NcPoly v = p;
    for (int iter = 0; iter <= p.max_depth() + 1; ++iter) {
        NcPoly next = p - (s_map(v, s) - v);
        if (next == v) return v;
        v = std::move(next);
    }
    throw std::logic_error("s_inverse_triangular: no convergence (S not unitriangular?)");
}

NcPoly gamma_map(const NcPoly& p, const CoefPoly& s) {
    NcPoly img_y = NcPoly::from_letter('x').scaled(s) + NcPoly::from_letter('y') +
                   NcPoly::scalar(CoefPoly::h() * s);
    return subst_letters(p, NcPoly::from_letter('x'), img_y);
}

NcPoly gamma_inverse(const NcPoly& p, const CoefPoly& s) {
    NcPoly img_y = NcPoly::from_letter('y') - NcPoly::from_letter('x').scaled(s) -
                   NcPoly::scalar(CoefPoly::h() * s);
    return subst_letters(p, NcPoly::from_letter('x'), img_y);
}

NcPoly phi_map(const NcPoly& p) {
    return subst_letters(p, NcPoly::from_letter('x') + NcPoly::from_letter('y'),
                         -NcPoly::from_letter('y'));
}

NcPoly phi_t_map(const NcPoly& p, const CoefPoly& s) {
    return -s_inverse(phi_map(s_map(p, s)), s);
}

NcPoly d1_derivation(const NcPoly& p) {
    const NcPoly xy = NcPoly::from_word("xy");
    NcPoly out;
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            NcPoly mid = (w[i] == 'x') ? xy : -xy;
            out += (NcPoly::from_word(w.substr(0, i)) * mid *
                    NcPoly::from_word(w.substr(i + 1))).scaled(c);
        }
    }
    return out;
}

NcPoly left_mult_x(const NcPoly& p) {
    return NcPoly::from_letter('x') * p;
}

}  // namespace tqmzv
