#pragma once

#include "tqmzv/word.hpp"

#include <functional>
#include <vector>

namespace tqmzv {

// Exhaustive generators for verification grids. All results are in a
// deterministic order (binary counting / lexicographic by construction).

// All 2^weight words of exactly the given weight (weight 0 -> {""}).
inline std::vector<Word> all_words(int weight) {
    std::vector<Word> out;
    if (weight < 0) return out;
    out.reserve(1u << weight);
    for (unsigned long m = 0; m < (1ul << weight); ++m) {
        Word w(static_cast<std::size_t>(weight), 'x');
        for (int i = 0; i < weight; ++i)
            if (m >> i & 1) w[static_cast<std::size_t>(i)] = 'y';
        out.push_back(std::move(w));
    }
    return out;
}

inline std::vector<Word> words_filtered(int min_weight, int max_weight,
                                        const std::function<bool(const Word&)>& keep) {
    std::vector<Word> out;
    for (int w = min_weight; w <= max_weight; ++w)
        for (auto& word : all_words(w))
            if (keep(word)) out.push_back(std::move(word));
    return out;
}

// Words of H1 with weight in [0, max_weight], the unit word included.
inline std::vector<Word> h1_words_up_to(int max_weight) {
    return words_filtered(0, max_weight, [](const Word& w) { return is_h1_word(w); });
}

// Nonempty words of H y (end in y) with weight in [1, max_weight].
inline std::vector<Word> hy_words_up_to(int max_weight) {
    return words_filtered(1, max_weight,
                          [](const Word& w) { return !w.empty() && is_h1_word(w); });
}

// Admissible words (in H0, nonempty) with weight in [2, max_weight].
inline std::vector<Word> admissible_words_up_to(int max_weight) {
    return words_filtered(2, max_weight,
                          [](const Word& w) { return !w.empty() && is_h0_word(w); });
}

inline std::vector<Word> hcheck1_words_up_to(int max_weight) {
    return words_filtered(1, max_weight, [](const Word& w) { return is_hcheck1_word(w); });
}

// All compositions of exactly `weight` (2^(weight-1) of them), optional
// depth cap.
inline std::vector<Index> compositions(int weight, int max_depth = -1) {
    std::vector<Index> out;
    if (weight < 1) return out;
    Index cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = 1; k <= rest; ++k) {
            if (max_depth >= 0 && index_depth(cur) + 1 > max_depth) break;
            cur.push_back(k);
            rec(rest - k);
            cur.pop_back();
        }
    };
    rec(weight);
    return out;
}

inline std::vector<Index> admissible_indices_up_to(int max_weight, int max_depth = -1) {
    std::vector<Index> out;
    for (int w = 2; w <= max_weight; ++w)
        for (auto& idx : compositions(w, max_depth))
            if (is_admissible(idx)) out.push_back(std::move(idx));
    return out;
}

inline std::vector<Index> indices_up_to(int max_weight, int max_depth = -1) {
    std::vector<Index> out;
    for (int w = 1; w <= max_weight; ++w)
        for (auto& idx : compositions(w, max_depth)) out.push_back(std::move(idx));
    return out;
}

}  // namespace tqmzv
