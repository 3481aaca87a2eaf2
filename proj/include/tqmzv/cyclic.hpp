#pragma once

#include "tqmzv/nc_poly.hpp"

#include <map>
#include <vector>

namespace tqmzv {

// Element of H^{(x)(n+1)}: Q[h,t]-combination of (n+1)-tuples of words.
class TensorElem {
public:
    using Key = std::vector<Word>;
    using TermMap = std::map<Key, CoefPoly>;

    explicit TensorElem(int slots);

    int slots() const { return slots_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Key& k, const CoefPoly& c);

    TensorElem operator-() const;
    TensorElem& operator+=(const TensorElem& o);
    TensorElem& operator-=(const TensorElem& o);
    friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
    friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }

    TensorElem scaled(const CoefPoly& c) const;

    // Extends the tensor by one factor on the right: T (x) p, bilinear.
    TensorElem append_factor(const NcPoly& p) const;

    friend bool operator==(const TensorElem& a, const TensorElem& b) {
        return a.slots_ == b.slots_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElem& a, const TensorElem& b) { return !(a == b); }

    std::string str() const;

private:
    int slots_;
    TermMap terms_;
};

// The diamond bimodule actions on H^{(x)(n+1)}:
//   a <> (w_1 (x) ... (x) w_{n+1}) = w_1 (x) ... (x) a w_{n+1}
//   (w_1 (x) ... (x) w_{n+1}) <> b = w_1 b (x) ... (x) w_{n+1}.
TensorElem diamond_left(const NcPoly& a, const TensorElem& T);
TensorElem diamond_right(const TensorElem& T, const NcPoly& b);

// C_{n,s}: linear, C(1) = 0, on letters C(x) = -C(y) =
// x (x) ((1-s)x + y - h s)^{(x)(n-1)} (x) y, extended to words by the
// letter-position expansion of the Leibniz rule with gamma-inverse factors.
TensorElem c_map(int n, const NcPoly& p, const CoefPoly& s = CoefPoly::t());

// Multiplication map: concatenates the factors in order.
NcPoly m_map(const TensorElem& T);

// rho_{n,s} = m_map o c_map(n, ., s).
NcPoly rho_map(int n, const NcPoly& p, const CoefPoly& s = CoefPoly::t());

// Closed form of rho_{1,s} on a word:
//   sum_i sgn(u_i) x gammainv(u_{i+1}...u_l u_1...u_{i-1}) y.
NcPoly rho1_closed_form(const Word& u, const CoefPoly& s = CoefPoly::t());

// rho_{1,t}(gamma(z_idx) - t^l x^{k-l}(x+h)^l): a kernel element of the
// evaluation map, computed through the cyclic operators.
NcPoly csf_kernel_element(const Index& idx);
// The same element as the explicit three-sum expansion; the two routes
// must agree structurally.
NcPoly csf_kernel_explicit(const Index& idx);

// All rotations of a nonempty word, deduplicated, starting position order.
std::vector<Word> cyclic_rotations(const Word& w);

}  // namespace tqmzv
