#include "tqmzv/enumerate.hpp"
#include "tqmzv/expr.hpp"
#include "tqmzv/relations.hpp"
#include "tqmzv/serialize.hpp"
#include "tqmzv/zeta.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <thread>
#include <vector>

namespace {

using namespace tqmzv;

// Writes either to stdout or to --out.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int default_order(const NcPoly& p) { return p.max_weight() + 12; }

using Task = std::function<std::vector<VerificationReport>()>;

// Runs tasks on a small pool; results keep enumeration order.
std::vector<VerificationReport> run_tasks(const std::vector<Task>& tasks, int jobs) {
    std::vector<std::vector<VerificationReport>> slots(tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) slots[i] = tasks[i]();
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                slots[i] = tasks[i]();
            }
        };
        std::vector<std::thread> pool;
        const int n = std::min<int>(jobs, static_cast<int>(tasks.size()));
        pool.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<VerificationReport> out;
    for (auto& s : slots)
        for (auto& r : s) out.push_back(std::move(r));
    return out;
}

struct VerifyConfig {
    std::string suite;
    std::optional<int> max_weight;
    std::optional<int> max_depth;
    std::optional<int> m;
    std::optional<int> order;
    int jobs = 1;
};

int order_for(const VerifyConfig& cfg, int weight) {
    return cfg.order ? *cfg.order : weight + 12;
}

void collect_kawashima(const VerifyConfig& cfg, std::vector<Task>& tasks) {
    const int maxw = cfg.max_weight.value_or(3);
    const int m_lo = cfg.m ? *cfg.m : 1;
    const int m_hi = cfg.m ? *cfg.m : 3;
    for (int m = m_lo; m <= m_hi; ++m)
        for (const Word& v : hy_words_up_to(maxw))
            for (const Word& w : hy_words_up_to(maxw)) {
                const int order = order_for(cfg, word_weight(v) + word_weight(w) + m);
                tasks.push_back([m, v, w, order] {
                    return std::vector{verify_kawashima(m, NcPoly::from_word(v),
                                                        NcPoly::from_word(w), order)};
                });
            }
}

void collect_csf(const VerifyConfig& cfg, std::vector<Task>& tasks) {
    const int maxw = cfg.max_weight.value_or(6);
    const int maxd = cfg.max_depth.value_or(4);
    for (const Index& idx : indices_up_to(maxw, maxd)) {
        if (is_all_ones(idx)) continue;
        const int order = order_for(cfg, index_weight(idx));
        tasks.push_back([idx, order] {
            return std::vector{verify_cyclic_sum(idx, order),
                               verify_cyclic_sum_symbolic(idx, order)};
        });
    }
}

void collect_hoffman(const VerifyConfig& cfg, std::vector<Task>& tasks) {
    const int maxw = cfg.max_weight.value_or(6);
    const int maxd = cfg.max_depth.value_or(-1);
    for (const Index& idx : admissible_indices_up_to(maxw, maxd)) {
        const int order = order_for(cfg, index_weight(idx));
        tasks.push_back([idx, order] { return std::vector{verify_hoffman(idx, order)}; });
    }
}

void collect_kernel(const VerifyConfig& cfg, std::vector<Task>& tasks) {
    const int maxw = cfg.max_weight.value_or(4);
    const int n_hi = cfg.m.value_or(2);
    for (int n = 1; n <= n_hi; ++n)
        for (const Word& w : hcheck1_words_up_to(maxw)) {
            const int order = order_for(cfg, word_weight(w) + n + 1);
            tasks.push_back(
                [w, n, order] { return std::vector{verify_kernel(w, n, order)}; });
        }
}

void collect_lemmas(const VerifyConfig& cfg, std::vector<Task>& tasks) {
    const int maxw = cfg.max_weight.value_or(4);
    tasks.push_back([maxw] { return verify_lemma_suite(maxw); });
}

int run_verify(const VerifyConfig& cfg, const std::string& out_path) {
    std::vector<Task> tasks;
    if (cfg.suite == "kawashima" || cfg.suite == "all") collect_kawashima(cfg, tasks);
    if (cfg.suite == "csf" || cfg.suite == "all") collect_csf(cfg, tasks);
    if (cfg.suite == "hoffman" || cfg.suite == "all") collect_hoffman(cfg, tasks);
    if (cfg.suite == "kernel" || cfg.suite == "all") collect_kernel(cfg, tasks);
    if (cfg.suite == "lemmas" || cfg.suite == "all") collect_lemmas(cfg, tasks);

    const std::vector<VerificationReport> reports = run_tasks(tasks, cfg.jobs);
    Sink sink(out_path);
    long failures = 0;
    for (const auto& rep : reports) {
        sink.stream() << rep.to_json_line() << "\n";
        if (!rep.pass) ++failures;
    }
    std::cerr << (reports.size() - static_cast<std::size_t>(failures)) << "/"
              << reports.size() << " checks passed\n";
    return failures == 0 ? 0 : 1;
}

int run_expand(const std::string& expr, const std::string& format,
               const std::string& out_path) {
    const NcPoly p = parse_expression(expr);
    Sink sink(out_path);
    if (format == "json")
        sink.stream() << nc_poly_to_json(p).dump() << "\n";
    else
        sink.stream() << p.str() << "\n";
    return 0;
}

struct EvalFlags {
    std::optional<int> order;
    std::string t_value;
    std::optional<double> q_value;
    double eps = 1e-12;
    std::string format = "text";
    std::string out_path;
};

int run_eval(const std::string& expr, const EvalFlags& flags) {
    const NcPoly p = parse_expression(expr);
    Sink sink(flags.out_path);
    if (flags.q_value) {
        const double t =
            flags.t_value.empty() ? 0.0 : Rational::parse(flags.t_value).to_double();
        const double value = numeric_z_eval(p, *flags.q_value, t, flags.eps);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.15g", value);
        sink.stream() << buf << "\n";
        return 0;
    }
    QSeries s = z_eval(p, flags.order.value_or(default_order(p)));
    if (!flags.t_value.empty()) s = s.subst_t(Rational::parse(flags.t_value));
    if (flags.format == "json")
        sink.stream() << qseries_to_json(s).dump() << "\n";
    else
        sink.stream() << s.str() << "\n";
    return 0;
}

int run_eval_star(const std::string& index_text, const EvalFlags& flags) {
    const Index idx = index_parse(index_text);
    Sink sink(flags.out_path);
    if (flags.q_value) {
        const double value = numeric_zeta_q_star(idx, *flags.q_value, flags.eps);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.15g", value);
        sink.stream() << buf << "\n";
        return 0;
    }
    const QSeries s = zeta_q_star(idx, flags.order.value_or(index_weight(idx) + 12));
    if (flags.format == "json")
        sink.stream() << qseries_to_json(s).dump() << "\n";
    else
        sink.stream() << s.str() << "\n";
    return 0;
}

void add_eval_flags(CLI::App* cmd, EvalFlags& flags) {
    cmd->add_option("--order", flags.order, "truncation order (default: weight + 12)");
    cmd->add_option("--t", flags.t_value, "substitute a rational for t");
    cmd->add_option("--q", flags.q_value, "numeric mode: evaluate at this q in (0,1)")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--eps", flags.eps, "numeric mode tail bound (default 1e-12)");
    cmd->add_option("--format", flags.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", flags.out_path, "write output to a file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact word-algebra and q-series engine for interpolated multiple zeta values"};
    app.require_subcommand(1);

    std::string cache_dir_flag;
    app.add_option("--cache-dir", cache_dir_flag,
                   "directory for the advisory series cache (or TQMZV_CACHE_DIR)");

    auto* expand = app.add_subcommand("expand", "parse an expression and print its normal form");
    std::string expand_expr;
    std::string expand_format = "text";
    std::string expand_out;
    expand->add_option("expr", expand_expr, "expression, e.g. \"S(z[2,1])\"")->required();
    expand->add_option("--format", expand_format)->check(CLI::IsMember({"text", "json"}));
    expand->add_option("--out", expand_out);

    auto* eval = app.add_subcommand("eval", "evaluate an expression as a q-series or float");
    std::string eval_expr;
    EvalFlags eval_flags;
    eval->add_option("expr", eval_expr, "expression, e.g. \"z[2,1]\"")->required();
    add_eval_flags(eval, eval_flags);

    auto* eval_star = app.add_subcommand("eval-star", "weakly-decreasing (star) evaluation of an index");
    std::string star_index;
    EvalFlags star_flags;
    eval_star->add_option("index", star_index, "index, e.g. \"2,1\"")->required();
    add_eval_flags(eval_star, star_flags);

    auto* verify = app.add_subcommand("verify", "run an identity suite and stream JSON-line reports");
    VerifyConfig vcfg;
    std::string verify_out;
    unsigned long seed = 0;
    verify->add_option("suite", vcfg.suite, "kawashima | csf | hoffman | kernel | lemmas | all")
        ->required()
        ->check(CLI::IsMember({"kawashima", "csf", "hoffman", "kernel", "lemmas", "all"}));
    verify->add_option("--max-weight", vcfg.max_weight, "largest weight in the grid");
    verify->add_option("--max-depth", vcfg.max_depth, "largest depth in the grid");
    verify->add_option("--m", vcfg.m, "family parameter (kawashima m; kernel max arity)");
    verify->add_option("--order", vcfg.order, "truncation order override");
    verify->add_option("--out", verify_out, "write reports to a file");
    verify->add_option("--jobs", vcfg.jobs, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "reserved; suites are exhaustive and deterministic");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!cache_dir_flag.empty()) set_cache_dir(cache_dir_flag);
        if (*expand) return run_expand(expand_expr, expand_format, expand_out);
        if (*eval) return run_eval(eval_expr, eval_flags);
        if (*eval_star) return run_eval_star(star_index, star_flags);
        if (*verify) return run_verify(vcfg, verify_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
