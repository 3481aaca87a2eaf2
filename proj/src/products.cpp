#include "tqmzv/products.hpp"

#include "tqmzv/maps.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace tqmzv {

namespace {

void require_h1(const NcPoly& p, const char* who) {
    if (!p.all_words_h1())
        throw std::domain_error(std::string(who) + ": argument outside H1");
}

void require_hy(const NcPoly& p, const char* who) {
    for (const auto& [w, c] : p.terms())
        if (w.empty() || !is_h1_word(w))
            throw std::domain_error(std::string(who) + ": argument outside H y");
}

void require_z_span(const NcPoly& p, const char* who) {
    if (!p.all_words_single_z())
        throw std::domain_error(std::string(who) + ": argument outside the z-span");
}

using WordPair = std::pair<Word, Word>;

// The three harmonic recursions share shape; memoized per word pair.
// Memo keys are not symmetrized, so commutativity stays a testable fact.
enum class StarKind { Plain, Plus, Interpolated };

template <StarKind kind>
NcPoly star_words(const Word& u, const Word& v) {
    if (u.empty()) return NcPoly::from_word(v);
    if (v.empty()) return NcPoly::from_word(u);

    static thread_local std::map<WordPair, NcPoly> memo;
    auto it = memo.find({u, v});
    if (it != memo.end()) return it->second;

    auto [i, du] = split_leading_z(u);
    auto [j, dv] = split_leading_z(v);
    NcPoly r = NcPoly::z(i) * star_words<kind>(du, v) +
               NcPoly::z(j) * star_words<kind>(u, dv);
    NcPoly rest = star_words<kind>(du, dv);
    if constexpr (kind == StarKind::Plain) {
        r += NcPoly::z(i + j) * rest;
    } else if constexpr (kind == StarKind::Plus) {
        r += circ_plus(i, j) * rest;
    } else {
        const CoefPoly t = CoefPoly::t();
        r += (circ_plus(i, j) * rest).scaled(CoefPoly(1) - CoefPoly(2) * t);
        r += circ_action(i, circ_action(j, rest)).scaled(t * t - t);
    }
    return memo.emplace(WordPair{u, v}, std::move(r)).first->second;
}

template <StarKind kind>
NcPoly star_bilinear(const NcPoly& u, const NcPoly& v, const char* who) {
    require_h1(u, who);
    require_h1(v, who);
    NcPoly out;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms())
            out += star_words<kind>(wu, wv).scaled(cu * cv);
    return out;
}

}  // namespace

NcPoly circ_plus(int i, int j) {
    if (i < 1 || j < 1) throw std::domain_error("circ_plus: letters need i,j >= 1");
    return NcPoly::z(i + j) + NcPoly::z(i + j - 1).scaled(CoefPoly::h());
}

NcPoly circ_plus(const NcPoly& a, const NcPoly& b) {
    require_z_span(a, "circ_plus");
    require_z_span(b, "circ_plus");
    NcPoly out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
            out += circ_plus(word_weight(wa), word_weight(wb)).scaled(ca * cb);
    return out;
}

NcPoly circ_action(int i, const NcPoly& w) {
    require_h1(w, "circ_action");
    NcPoly out;
    for (const auto& [word, c] : w.terms()) {
        if (word.empty()) continue;  // z_i o+ 1 = 0
        auto [j, rest] = split_leading_z(word);
        out += (circ_plus(i, j) * NcPoly::from_word(rest)).scaled(c);
    }
    return out;
}

NcPoly circ_action(const NcPoly& a, const NcPoly& w) {
    require_z_span(a, "circ_action");
    NcPoly out;
    for (const auto& [wa, ca] : a.terms())
        out += circ_action(word_weight(wa), w).scaled(ca);
    return out;
}

NcPoly harmonic_star(const NcPoly& u, const NcPoly& v) {
    return star_bilinear<StarKind::Plain>(u, v, "harmonic_star");
}

NcPoly harmonic_star_plus(const NcPoly& u, const NcPoly& v) {
    return star_bilinear<StarKind::Plus>(u, v, "harmonic_star_plus");
}

NcPoly t_harmonic(const NcPoly& u, const NcPoly& v) {
    return star_bilinear<StarKind::Interpolated>(u, v, "t_harmonic");
}

NcPoly circledast(const NcPoly& u, const NcPoly& v) {
    require_hy(u, "circledast");
    require_hy(v, "circledast");
    NcPoly out;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) {
            auto [i, du] = split_leading_z(wu);
            auto [j, dv] = split_leading_z(wv);
            out += (NcPoly::z(i + j) *
                    star_words<StarKind::Plus>(du, dv)).scaled(cu * cv);
        }
    return out;
}

NcPoly t_circledast(const NcPoly& u, const NcPoly& v) {
    require_hy(u, "t_circledast");
    require_hy(v, "t_circledast");
    return s_inverse(circledast(s_map(u), s_map(v)));
}

}  // namespace tqmzv
