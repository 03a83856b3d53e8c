#include "vdec/survey.hpp"

#include "vdec/colorer.hpp"
#include "vdec/enumerate.hpp"
#include "vdec/verify.hpp"

#include <atomic>
#include <sstream>
#include <thread>

namespace vdec {

int conj3_minimal_k(int n1, int n2) {
    for (int k = 1;; ++k) {
        long long side = n1 + k - 1;
        if (2LL * n2 <= side * side) return k;
    }
}

bool SurveyRow::violates_theorems() const {
    if (timeout) return false;
    if (chi_predicted && !flags.count("Thm1Match")) return true;
    if (chi_predicted && chi_es_exact && !flags.count("Thm2Match")) return true;
    if (!flags.count("Conj1Holds")) return true;
    return false;
}

bool SurveyRow::violates_conj3() const { return !timeout && !flags.count("Conj3Holds"); }

SurveyRow survey_tree(const Tree& t, const SolverConfig& cfg) {
    SurveyRow row;
    row.canonical_id = canonical_id(t);
    row.p = t.p();
    row.q = t.q();
    row.n1 = t.n1();
    row.n2 = t.n2();
    row.D = t.diameter;
    row.k_lower = conjecture_lower_bound(t.profile);

    try {
        row.chi_predicted = predict_chi_s(t).value;
    } catch (const Error& e) {
        if (e.code() != Errc::HypothesisViolated && e.code() != Errc::TooSmall) throw;
        row.flags.insert("HypothesisOutside");
    }

    try {
        row.chi_exact = exact_chi_s(t.graph, cfg).chi;
        if (t.q() <= 2 * (t.n1() + 1)) row.chi_es_exact = exact_chi_es(t.graph, cfg).chi;
    } catch (const Error& e) {
        if (e.code() != Errc::BudgetExceeded) throw;
        row.timeout = true;
        row.flags.insert("Timeout");
        return row;
    }

    int chi = *row.chi_exact;
    if (row.chi_predicted && *row.chi_predicted == chi) row.flags.insert("Thm1Match");
    if (row.chi_es_exact && *row.chi_es_exact == chi) row.flags.insert("Thm2Match");
    if (row.k_lower <= chi && chi <= row.k_lower + 1) row.flags.insert("Conj1Holds");
    if (chi <= row.n1 + conj3_minimal_k(row.n1, row.n2)) row.flags.insert("Conj3Holds");
    return row;
}

std::string survey_csv_header() {
    return "canonical_id,p,q,n1,n2,D,k_lower,chi_exact,chi_predicted,chi_es_exact,flags";
}

std::string survey_row_csv(const SurveyRow& row) {
    static const char* kOrder[] = {"Thm1Match",  "Thm2Match",         "Conj1Holds",
                                   "Conj3Holds", "HypothesisOutside", "Timeout"};
    std::ostringstream out;
    auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    out << row.canonical_id << "," << row.p << "," << row.q << "," << row.n1 << "," << row.n2
        << "," << row.D << "," << row.k_lower << "," << opt(row.chi_exact) << ","
        << opt(row.chi_predicted) << "," << opt(row.chi_es_exact) << ",";
    bool first = true;
    for (const char* flag : kOrder)
        if (row.flags.count(flag)) {
            if (!first) out << ";";
            out << flag;
            first = false;
        }
    return out.str();
}

void run_survey(const SurveyOptions& opt, const std::function<void(const SurveyRow&)>& sink) {
    SolverConfig cfg;
    cfg.node_budget = opt.node_budget;
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        std::vector<Tree> trees = enumerate_trees(n);
        std::vector<int> todo;
        for (size_t i = 0; i < trees.size(); ++i)
            if (!opt.skip_ids.count(canonical_id(trees[i]))) todo.push_back(static_cast<int>(i));
        if (todo.empty()) continue;

        std::vector<SurveyRow> rows(todo.size());
        int workers = std::max(1, opt.workers);
        if (workers == 1) {
            for (size_t j = 0; j < todo.size(); ++j) rows[j] = survey_tree(trees[todo[j]], cfg);
        } else {
            std::atomic<size_t> next{0};
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&] {
                    for (size_t j = next.fetch_add(1); j < todo.size(); j = next.fetch_add(1))
                        rows[j] = survey_tree(trees[todo[j]], cfg);
                });
            for (auto& th : pool) th.join();
        }
        for (const SurveyRow& row : rows) sink(row);
    }
}

} // namespace vdec
