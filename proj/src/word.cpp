#include "tqmzv/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tqmzv {

bool is_valid_word(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == 'x' || c == 'y'; });
}

int word_depth(const Word& w) {
    return static_cast<int>(std::count(w.begin(), w.end(), 'y'));
}

bool is_y_power(const Word& w) {
    return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) { return c == 'y'; });
}

std::pair<int, Word> split_leading_z(const Word& w) {
    std::size_t p = w.find('y');
    if (p == Word::npos)
        throw std::invalid_argument("split_leading_z: no y in '" + w + "'");
    return {static_cast<int>(p) + 1, w.substr(p + 1)};
}

Word word_from_index(const Index& idx) {
    Word w;
    for (int k : idx) {
        if (k < 1) throw std::invalid_argument("index part < 1");
        w.append(static_cast<std::size_t>(k - 1), 'x');
        w.push_back('y');
    }
    return w;
}

Index index_from_word(const Word& w) {
    if (w.empty() || !is_h1_word(w))
        throw std::invalid_argument("index_from_word: not a nonempty H1 word: '" + w + "'");
    Index idx;
    int run = 0;
    for (char c : w) {
        if (c == 'x') {
            ++run;
        } else {
            idx.push_back(run + 1);
            run = 0;
        }
    }
    return idx;
}

int index_weight(const Index& idx) {
    int k = 0;
    for (int p : idx) k += p;
    return k;
}

bool is_all_ones(const Index& idx) {
    return !idx.empty() && std::all_of(idx.begin(), idx.end(), [](int k) { return k == 1; });
}

std::string index_str(const Index& idx) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i]);
    }
    return s;
}

Index index_parse(const std::string& s) {
    Index idx;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("index_parse: bad index '" + s + "'");
        idx.push_back(std::stoi(s.substr(start, i - start)));
        if (idx.back() < 1) throw std::invalid_argument("index_parse: part < 1 in '" + s + "'");
        if (i < s.size()) {
            if (s[i] != ',') throw std::invalid_argument("index_parse: bad separator in '" + s + "'");
            ++i;
            if (i == s.size()) throw std::invalid_argument("index_parse: trailing comma in '" + s + "'");
        }
    }
    if (idx.empty()) throw std::invalid_argument("index_parse: empty index");
    return idx;
}

}  // namespace tqmzv
