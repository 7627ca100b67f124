#pragma once

#include "homlab/budget.hpp"
#include "homlab/local_oracle.hpp"
#include "homlab/reductions/output.hpp"
#include "homlab/whom_solver.hpp"

namespace homlab {

/// Answers the generated instance by exhaustive search: threshold met by the
/// best list homomorphism, or existence of a locally surjective homomorphism.
inline bool generated_answer(const ReductionOutput& out, SearchBudget budget = SearchBudget(200'000'000)) {
    if (out.is_decision())
        return oracle_local(out.instance, out.target, LocalVariant::surjective, budget).has_value();
    WhomInstance inst(out.instance, out.target, out.weights ? *out.weights : WeightModel(out.instance, out.target),
                      out.lists ? *out.lists : ListAssignment::full(out.instance, out.target));
    return oracle_whom(inst, budget).meets(*out.threshold);
}

/// Does the source answer agree with the brute-force answer on the generated instance?
/// Budget exhaustion propagates as BudgetExceeded.
inline bool verify_reduction(bool source_yes, const ReductionOutput& out,
                             SearchBudget budget = SearchBudget(200'000'000)) {
    return source_yes == generated_answer(out, budget);
}

} // namespace homlab
