#include "tqmzv/cyclic.hpp"

#include "tqmzv/maps.hpp"
#include "tqmzv/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace tqmzv {

TensorElem::TensorElem(int slots) : slots_(slots) {
    if (slots < 2) throw std::invalid_argument("TensorElem: need at least 2 slots");
}

void TensorElem::add_term(const Key& k, const CoefPoly& c) {
    if (static_cast<int>(k.size()) != slots_)
        throw std::invalid_argument("TensorElem: slot count mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElem TensorElem::operator-() const {
    TensorElem r(slots_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

TensorElem& TensorElem::operator+=(const TensorElem& o) {
    if (slots_ != o.slots_) throw std::invalid_argument("TensorElem: arity mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TensorElem& TensorElem::operator-=(const TensorElem& o) {
    if (slots_ != o.slots_) throw std::invalid_argument("TensorElem: arity mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

TensorElem TensorElem::scaled(const CoefPoly& c) const {
    TensorElem r(slots_);
    for (const auto& [k, kc] : terms_) r.add_term(k, c * kc);
    return r;
}

TensorElem TensorElem::append_factor(const NcPoly& p) const {
    TensorElem r(slots_ + 1);
    for (const auto& [k, kc] : terms_)
        for (const auto& [w, wc] : p.terms()) {
            Key nk = k;
            nk.push_back(w);
            r.add_term(nk, kc * wc);
        }
    return r;
}

std::string TensorElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.str() + ")*[";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) out += "(x)";
            out += k[i].empty() ? "1" : k[i];
        }
        out += "]";
    }
    return out;
}

TensorElem diamond_left(const NcPoly& a, const TensorElem& T) {
    TensorElem r(T.slots());
    for (const auto& [k, kc] : T.terms())
        for (const auto& [w, wc] : a.terms()) {
            TensorElem::Key nk = k;
            nk.back() = w + nk.back();
            r.add_term(nk, wc * kc);
        }
    return r;
}

TensorElem diamond_right(const TensorElem& T, const NcPoly& b) {
    TensorElem r(T.slots());
    for (const auto& [k, kc] : T.terms())
        for (const auto& [w, wc] : b.terms()) {
            TensorElem::Key nk = k;
            nk.front() = nk.front() + w;
            r.add_term(nk, kc * wc);
        }
    return r;
}

namespace {

// x (x) ((1-s)x + y - h s)^{(x)(n-1)} (x) y.
TensorElem c_base(int n, const CoefPoly& s) {
    if (n == 1) {
        TensorElem b(2);
        b.add_term({Word("x"), Word("y")}, CoefPoly(1));
        return b;
    }
    NcPoly mid = NcPoly::from_letter('x').scaled(CoefPoly(1) - s) +
                 NcPoly::from_letter('y') - NcPoly::scalar(CoefPoly::h() * s);
    TensorElem seed(2);
    for (const auto& [w, wc] : mid.terms()) seed.add_term({Word("x"), w}, wc);
    for (int i = 2; i < n; ++i) seed = seed.append_factor(mid);
    return seed.append_factor(NcPoly::from_letter('y'));
}

}  // namespace

TensorElem c_map(int n, const NcPoly& p, const CoefPoly& s) {
    if (n < 1) throw std::invalid_argument("c_map: n must be >= 1");
    TensorElem base = c_base(n, s);
    TensorElem out(n + 1);
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            TensorElem term = (w[i] == 'x') ? base : -base;
            NcPoly pre = gamma_inverse(NcPoly::from_word(w.substr(0, i)), s);
            NcPoly suf = gamma_inverse(NcPoly::from_word(w.substr(i + 1)), s);
            out += diamond_right(diamond_left(pre, term), suf).scaled(c);
        }
    }
    return out;
}

NcPoly m_map(const TensorElem& T) {
    NcPoly out;
    for (const auto& [k, c] : T.terms()) {
        Word w;
        for (const auto& f : k) w += f;
        out.add_term(w, c);
    }
    return out;
}

NcPoly rho_map(int n, const NcPoly& p, const CoefPoly& s) {
    return m_map(c_map(n, p, s));
}

NcPoly rho1_closed_form(const Word& u, const CoefPoly& s) {
    if (u.empty()) throw std::invalid_argument("rho1_closed_form: empty word");
    const std::size_t l = u.size();
    NcPoly out;
    for (std::size_t i = 0; i < l; ++i) {
        Word rot = u.substr(i + 1) + u.substr(0, i);
        NcPoly mid = gamma_inverse(NcPoly::from_word(rot), s);
        NcPoly term = NcPoly::from_letter('x') * mid * NcPoly::from_letter('y');
        out += (u[i] == 'x') ? term : -term;
    }
    return out;
}

NcPoly csf_kernel_element(const Index& idx) {
    if (is_all_ones(idx)) throw std::domain_error("csf_kernel_element: all-ones index");
    const int l = index_depth(idx);
    const int k = index_weight(idx);
    const CoefPoly t = CoefPoly::t();
    NcPoly xh = NcPoly::from_letter('x') + NcPoly::scalar(CoefPoly::h());
    NcPoly corr = NcPoly::from_word(Word(static_cast<std::size_t>(k - l), 'x'));
    for (int i = 0; i < l; ++i) corr *= xh;
    NcPoly arg = gamma_map(NcPoly::from_index(idx)) - corr.scaled(t.pow(static_cast<unsigned>(l)));
    return rho_map(1, arg);
}

NcPoly csf_kernel_explicit(const Index& idx) {
    if (is_all_ones(idx)) throw std::domain_error("csf_kernel_explicit: all-ones index");
    const int l = index_depth(idx);
    const int k = index_weight(idx);
    const CoefPoly t = CoefPoly::t();
    NcPoly out;

    // sum_i sum_{j=0}^{k_i-2} z_{k_i-j} z_{k_{i+1}} ... z_{k_{i-1}} z_{j+1}
    for (int i = 0; i < l; ++i)
        for (int j = 0; j + 2 <= idx[static_cast<std::size_t>(i)]; ++j) {
            Index rot;
            rot.push_back(idx[static_cast<std::size_t>(i)] - j);
            for (int d = 1; d < l; ++d)
                rot.push_back(idx[static_cast<std::size_t>((i + d) % l)]);
            rot.push_back(j + 1);
            out += NcPoly::from_index(rot);
        }

    // -(1-t) sum_i z_{k_i+1} z_{k_{i+1}} ... z_{k_{i-1}}
    for (int i = 0; i < l; ++i) {
        Index rot;
        rot.push_back(idx[static_cast<std::size_t>(i)] + 1);
        for (int d = 1; d < l; ++d)
            rot.push_back(idx[static_cast<std::size_t>((i + d) % l)]);
        out -= NcPoly::from_index(rot).scaled(CoefPoly(1) - t);
    }

    // -t^l sum_{i=0}^{l} (k-i) C(l,i) h^i z_{k-i+1}
    for (int i = 0; i <= l; ++i) {
        CoefPoly coef = t.pow(static_cast<unsigned>(l)) *
                        CoefPoly::monomial(Rational::binomial(static_cast<unsigned long>(l),
                                                              static_cast<unsigned long>(i)) *
                                               Rational(k - i),
                                           i, 0);
        out -= NcPoly::z(k - i + 1).scaled(coef);
    }
    return out;
}

std::vector<Word> cyclic_rotations(const Word& w) {
    if (w.empty()) throw std::invalid_argument("cyclic_rotations: empty word");
    std::vector<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        Word r = w.substr(i) + w.substr(0, i);
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace tqmzv
