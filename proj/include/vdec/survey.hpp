#pragma once

#include "vdec/exact.hpp"
#include "vdec/graph.hpp"

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace vdec {

struct SurveyRow {
    std::string canonical_id;
    int p = 0, q = 0, n1 = 0, n2 = 0, D = 0;
    int k_lower = 0;
    std::optional<int> chi_exact;        // absent only on timeout
    std::optional<int> chi_predicted;    // present iff p >= 3 and (n2 <= n1 or P5)
    std::optional<int> chi_es_exact;     // present iff q <= 2(n1+1)
    std::set<std::string> flags;         // Thm1Match Thm2Match Conj1Holds Conj3Holds
                                         // HypothesisOutside Timeout
    bool timeout = false;

    bool violates_theorems() const;      // Thm1/Thm2/Conj1 failure on an applicable row
    bool violates_conj3() const;
};

/// Smallest k >= 1 with 2*n2 <= (n1+k-1)^2 (the binding case of the
/// quadratic conjecture).
int conj3_minimal_k(int n1, int n2);

/// Evaluate one tree: exact chi (oracle), prediction, equitable chi where the
/// edge bound allows, and all flags. Timeouts mark the row instead of
/// propagating.
SurveyRow survey_tree(const Tree& t, const SolverConfig& cfg = {});

std::string survey_csv_header();
std::string survey_row_csv(const SurveyRow& row);

struct SurveyOptions {
    int n_min = 3;
    int n_max = 10;
    long long node_budget = 100'000'000;
    int workers = 1;
    std::set<std::string> skip_ids;      // resume support
};

/// Rows for all free trees with n_min <= p <= n_max, delivered in
/// enumeration order through the sink (single-threaded sink; parallel
/// evaluation when workers > 1).
void run_survey(const SurveyOptions& opt, const std::function<void(const SurveyRow&)>& sink);

} // namespace vdec
