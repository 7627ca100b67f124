#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>

#include "homlab/errors.hpp"

namespace homlab {

/// Work limit shared by a search: a node counter plus an optional wall-clock deadline.
class SearchBudget {
public:
    using Clock = std::chrono::steady_clock;

    SearchBudget() = default;
    explicit SearchBudget(std::uint64_t node_limit) : limit_(node_limit) {}

    static SearchBudget unlimited() { return SearchBudget(); }

    SearchBudget& with_time_limit(std::chrono::milliseconds ms) {
        deadline_ = Clock::now() + ms;
        return *this;
    }

    /// Applies HOMLAB_BUDGET_MS from the environment, when set.
    SearchBudget& with_env_time_limit() {
        if (const char* v = std::getenv("HOMLAB_BUDGET_MS")) {
            char* end = nullptr;
            long long ms = std::strtoll(v, &end, 10);
            if (end != v && ms > 0)
                with_time_limit(std::chrono::milliseconds(ms));
        }
        return *this;
    }

    /// Counts one unit of work; throws BudgetExceeded when a limit is hit.
    void tick(const char* what, std::size_t partial_bound = 0) {
        if (++used_ > limit_)
            throw BudgetExceeded(std::string(what) + ": node budget exhausted", partial_bound);
        if (deadline_ && (used_ & 1023) == 0 && Clock::now() > *deadline_)
            throw BudgetExceeded(std::string(what) + ": time budget exhausted", partial_bound);
    }

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_ = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t used_ = 0;
    std::optional<Clock::time_point> deadline_;
};

} // namespace homlab
