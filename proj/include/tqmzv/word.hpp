#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tqmzv {

// A word over the alphabet {x,y}; "" is the unit word 1. All functions
// below assume validity; parse boundaries call is_valid_word.
using Word = std::string;

// Composition (k_1,...,k_l), all parts >= 1. The empty index encodes the
// unit word. Admissible iff nonempty and k_1 >= 2.
using Index = std::vector<int>;

bool is_valid_word(const Word& w);

inline int word_weight(const Word& w) { return static_cast<int>(w.size()); }
int word_depth(const Word& w);

// H1 = Q[h,t] + H y: constants plus words ending in y.
inline bool is_h1_word(const Word& w) { return w.empty() || w.back() == 'y'; }
// H0 = Q[h,t] + x H y.
inline bool is_h0_word(const Word& w) {
    return w.empty() || (w.front() == 'x' && w.back() == 'y');
}
bool is_y_power(const Word& w);
// Hcheck1: nonempty H1 words that are not powers of y.
inline bool is_hcheck1_word(const Word& w) {
    return !w.empty() && is_h1_word(w) && !is_y_power(w);
}

// Splits w = z_k w' at the first y; requires w to contain a y. The
// remainder w' is again in H1 whenever w is.
std::pair<int, Word> split_leading_z(const Word& w);

// z_{k_1} ... z_{k_l} with z_j = x^{j-1}y.
Word word_from_index(const Index& idx);
// Inverse of word_from_index; requires a nonempty H1 word.
Index index_from_word(const Word& w);

int index_weight(const Index& idx);
inline int index_depth(const Index& idx) { return static_cast<int>(idx.size()); }
inline bool is_admissible(const Index& idx) { return !idx.empty() && idx[0] >= 2; }
bool is_all_ones(const Index& idx);

// "2,1" <-> (2,1). parse throws std::invalid_argument on malformed input.
std::string index_str(const Index& idx);
Index index_parse(const std::string& s);

}  // namespace tqmzv
