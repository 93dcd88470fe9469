#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tambara {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail; // first failures, or a short summary
};

struct AcceptanceOptions {
    uint64_t seed = 20240601;
    size_t axiom_samples = 200;
    size_t hnf_trials = 1000;
};

CriterionResult criterion_counts(const AcceptanceOptions& opt);
CriterionResult criterion_hull(const AcceptanceOptions& opt);
CriterionResult criterion_axioms(const AcceptanceOptions& opt);
CriterionResult criterion_cohomological(const AcceptanceOptions& opt);
CriterionResult criterion_constant_tables(const AcceptanceOptions& opt);
CriterionResult criterion_burnside_cp(const AcceptanceOptions& opt);
CriterionResult criterion_burnside_cp2(const AcceptanceOptions& opt);
CriterionResult criterion_hull_sensitivity(const AcceptanceOptions& opt);
CriterionResult criterion_cpq(const AcceptanceOptions& opt);
CriterionResult criterion_properties(const AcceptanceOptions& opt);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});
// "PASS  3 axiom suite: ..." on one line
std::string format_result(const CriterionResult& r);

} // namespace tambara
