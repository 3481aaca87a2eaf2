#include "tqmzv/zeta.hpp"

#include "tqmzv/maps.hpp"
#include "tqmzv/serialize.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tqmzv {

namespace {

void require_admissible(const Index& idx, const char* where) {
    if (!is_admissible(idx))
        throw std::domain_error(std::string(where) + ": index must be admissible (k_1 >= 2)");
}

// Coefficients of s shifted up by `shift` q-powers, widened to target_order.
QSeries shift_up(const QSeries& s, int shift, int target_order) {
    QSeries out(target_order);
    for (int n = 0; n <= s.order() && n + shift <= target_order; ++n)
        out.set_coeff(n + shift, s.coeff(n));
    return out;
}

struct CacheState {
    std::mutex mu;
    std::string dir;
    bool loaded = false;
    std::map<std::pair<Index, int>, QSeries> entries;

    CacheState() {
        if (const char* env = std::getenv("TQMZV_CACHE_DIR")) dir = env;
    }

    std::string file() const { return dir + "/zeta_q.cache"; }

    // Call with mu held.
    void ensure_loaded() {
        if (loaded || dir.empty()) {
            loaded = true;
            return;
        }
        loaded = true;
        std::ifstream in(file());
        if (!in) return;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Index idx;
            int order = 0;
            QSeries s(0);
            if (parse_cache_line(line, idx, order, s))
                entries.insert_or_assign({idx, order}, std::move(s));
        }
    }
};

CacheState& cache_state() {
    static CacheState s;
    return s;
}

std::optional<QSeries> disk_lookup(const Index& idx, int order) {
    CacheState& st = cache_state();
    std::lock_guard<std::mutex> lock(st.mu);
    if (st.dir.empty()) return std::nullopt;
    st.ensure_loaded();
    // Entries for one index are contiguous; any order >= the request works.
    auto it = st.entries.lower_bound({idx, order});
    if (it != st.entries.end() && it->first.first == idx)
        return it->second.truncated(order);
    return std::nullopt;
}

void disk_store(const Index& idx, const QSeries& s) {
    CacheState& st = cache_state();
    std::lock_guard<std::mutex> lock(st.mu);
    if (st.dir.empty()) return;
    st.ensure_loaded();
    if (!st.entries.emplace(std::pair{idx, s.order()}, s).second) return;
    std::ofstream out(st.file(), std::ios::app);
    if (out) out << cache_line(idx, s) << "\n";
}

enum class Descent { Strict, Weak };

QSeries zeta_dp(const Index& idx, int order, Descent descent) {
    const int l = static_cast<int>(idx.size());
    // G[j] holds the partial sum over chains starting at position j with
    // m_j <= current m; G[l+1] is the empty product.
    std::vector<QSeries> g(static_cast<std::size_t>(l) + 2, QSeries(order));
    g[static_cast<std::size_t>(l) + 1] = QSeries::constant(TPoly(1), order);
    for (int m = 1; m <= order; ++m) {
        // Strict descent pairs position j with the previous m of position
        // j+1, so update in increasing j; weak descent shares the current m,
        // so update in decreasing j.
        for (int step = 0; step < l; ++step) {
            const int j = descent == Descent::Strict ? step + 1 : l - step;
            const int k = idx[static_cast<std::size_t>(j - 1)];
            const int shift = (k - 1) * m;
            if (shift > order) continue;
            QSeries term = inv_qbracket_pow(m, k, order - shift) *
                           g[static_cast<std::size_t>(j) + 1].truncated(order - shift);
            g[static_cast<std::size_t>(j)] += shift_up(term, shift, order);
        }
    }
    return g[1];
}

// Applies one filler assignment (base-3 digits) to an index; counts the
// merge and merge-minus-one slots.
Index merge_index(const Index& idx, long fillers, int& merges, int& decrements) {
    Index merged;
    int cur = idx[0];
    merges = 0;
    decrements = 0;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        const int digit = static_cast<int>(fillers % 3);
        fillers /= 3;
        if (digit == 0) {
            merged.push_back(cur);
            cur = idx[i];
        } else if (digit == 1) {
            cur += idx[i];
            ++merges;
        } else {
            cur += idx[i] - 1;
            ++merges;
            ++decrements;
        }
    }
    merged.push_back(cur);
    return merged;
}

void require_h0(const NcPoly& p, const char* where) {
    for (const auto& [w, c] : p.terms())
        if (!is_h0_word(w))
            throw std::domain_error(std::string(where) + ": word outside x..y span: " + w);
}

double coef_eval_double(const CoefPoly& c, double h, double t) {
    double acc = 0.0;
    for (const auto& [exp, r] : c.terms())
        acc += r.to_double() * std::pow(h, exp.h) * std::pow(t, exp.t);
    return acc;
}

double numeric_zeta_dp(const Index& idx, double q, double eps, Descent descent) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("numeric evaluation needs 0 < q < 1");
    if (!(eps > 0.0)) throw std::domain_error("numeric evaluation needs eps > 0");
    const int l = static_cast<int>(idx.size());
    std::vector<double> g(static_cast<std::size_t>(l) + 2, 0.0);
    g[static_cast<std::size_t>(l) + 1] = 1.0;
    const double guard = eps * (1.0 - q) * 0.125;
    int quiet = 0;
    constexpr long cap = 4'000'000;
    double qm = 1.0;  // q^m
    for (long m = 1; m <= cap; ++m) {
        qm *= q;
        double outer = 0.0;
        for (int step = 0; step < l; ++step) {
            const int j = descent == Descent::Strict ? step + 1 : l - step;
            const int k = idx[static_cast<std::size_t>(j - 1)];
            const double bracket = (1.0 - qm) / (1.0 - q);
            const double term = std::pow(qm, k - 1) / std::pow(bracket, k) *
                                g[static_cast<std::size_t>(j) + 1];
            g[static_cast<std::size_t>(j)] += term;
            if (j == 1) outer = term;
        }
        quiet = std::abs(outer) < guard ? quiet + 1 : 0;
        if (quiet >= 4) break;
    }
    return g[1];
}

}  // namespace

QSeries inv_qbracket_pow(int m, int k, int order) {
    if (m < 1 || k < 1) throw std::domain_error("inv_qbracket_pow: need m >= 1, k >= 1");
    QSeries expansion(order);
    for (int r = 0; m * r <= order; ++r) {
        Rational c = Rational::binomial(static_cast<unsigned long>(k - 1 + r),
                                        static_cast<unsigned long>(r));
        expansion.set_coeff(m * r, TPoly(c));
    }
    return QSeries::one_minus_q_pow(k, order) * expansion;
}

QSeries zeta_q(const Index& idx, int order) {
    require_admissible(idx, "zeta_q");
    static thread_local std::map<std::pair<Index, int>, QSeries> memo;
    const std::pair<Index, int> key{idx, order};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (auto cached = disk_lookup(idx, order)) {
        memo.emplace(key, *cached);
        return *cached;
    }
    QSeries result = zeta_dp(idx, order, Descent::Strict);
    disk_store(idx, result);
    memo.emplace(key, result);
    return result;
}

QSeries zeta_q_star(const Index& idx, int order) {
    require_admissible(idx, "zeta_q_star");
    static thread_local std::map<std::pair<Index, int>, QSeries> memo;
    const std::pair<Index, int> key{idx, order};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    QSeries result = zeta_dp(idx, order, Descent::Weak);
    memo.emplace(key, result);
    return result;
}

QSeries zeta_q_t_direct(const Index& idx, int order) {
    require_admissible(idx, "zeta_q_t_direct");
    const std::size_t slots = idx.size() - 1;
    long count = 1;
    for (std::size_t i = 0; i < slots; ++i) count *= 3;
    QSeries acc(order);
    for (long f = 0; f < count; ++f) {
        int merges = 0;
        int decrements = 0;
        Index merged = merge_index(idx, f, merges, decrements);
        QSeries term = zeta_q(merged, order).scaled(TPoly::monomial(Rational(1), merges));
        if (decrements > 0) term = term * QSeries::one_minus_q_pow(decrements, order);
        acc += term;
    }
    return acc;
}

QSeries z_eval_base(const NcPoly& p, int order) {
    require_h0(p, "z_eval_base");
    QSeries acc(order);
    for (const auto& [w, c] : p.terms()) {
        QSeries coeff = qseries_from_coef(c, order);
        if (w.empty())
            acc += coeff;
        else
            acc += coeff * zeta_q(index_from_word(w), order);
    }
    return acc;
}

QSeries z_eval(const NcPoly& p, int order) {
    require_h0(p, "z_eval");
    return z_eval_base(s_map(p), order);
}

QSeries z_eval_direct(const NcPoly& p, int order) {
    require_h0(p, "z_eval_direct");
    QSeries acc(order);
    for (const auto& [w, c] : p.terms()) {
        QSeries coeff = qseries_from_coef(c, order);
        if (w.empty())
            acc += coeff;
        else
            acc += coeff * zeta_q_t_direct(index_from_word(w), order);
    }
    return acc;
}

double numeric_zeta_q(const Index& idx, double q, double eps) {
    require_admissible(idx, "numeric_zeta_q");
    return numeric_zeta_dp(idx, q, eps, Descent::Strict);
}

double numeric_zeta_q_star(const Index& idx, double q, double eps) {
    require_admissible(idx, "numeric_zeta_q_star");
    return numeric_zeta_dp(idx, q, eps, Descent::Weak);
}

double numeric_zeta_q_t(const Index& idx, double q, double t, double eps) {
    require_admissible(idx, "numeric_zeta_q_t");
    const std::size_t slots = idx.size() - 1;
    long count = 1;
    for (std::size_t i = 0; i < slots; ++i) count *= 3;
    double acc = 0.0;
    for (long f = 0; f < count; ++f) {
        int merges = 0;
        int decrements = 0;
        Index merged = merge_index(idx, f, merges, decrements);
        acc += std::pow(t, merges) * std::pow(1.0 - q, decrements) *
               numeric_zeta_q(merged, q, eps);
    }
    return acc;
}

double numeric_z_eval(const NcPoly& p, double q, double t, double eps) {
    require_h0(p, "numeric_z_eval");
    NcPoly expanded = s_map(p);
    double acc = 0.0;
    for (const auto& [w, c] : expanded.terms()) {
        const double coeff = coef_eval_double(c, 1.0 - q, t);
        acc += w.empty() ? coeff : coeff * numeric_zeta_q(index_from_word(w), q, eps);
    }
    return acc;
}

void set_cache_dir(const std::string& dir) {
    CacheState& st = cache_state();
    std::lock_guard<std::mutex> lock(st.mu);
    st.dir = dir;
    st.loaded = false;
    st.entries.clear();
}

std::optional<std::string> cache_dir() {
    CacheState& st = cache_state();
    std::lock_guard<std::mutex> lock(st.mu);
    if (st.dir.empty()) return std::nullopt;
    return st.dir;
}

}  // namespace tqmzv
