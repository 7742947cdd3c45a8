#ifndef CTX_ASSIGNMENTS_HPP
#define CTX_ASSIGNMENTS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ctx/scenario.hpp"

namespace ctx {

struct IncompleteScenarioError : std::runtime_error {
    IncompleteScenarioError()
        : std::runtime_error("scenario has a context smaller than the dimension") {}
};
struct UnknownRayIdError : std::runtime_error {
    UnknownRayIdError() : std::runtime_error("assignment references an unknown ray id") {}
};

/**
 * Total {0,1} valuation of the rays with exactly one 1 per context.
 * `ones` lists the 1-valued ray ids in increasing order.
 */
struct GlobalAssignment {
    std::vector<std::uint8_t> values;   // indexed by ray id
    std::vector<std::size_t> ones;

    bool operator==(const GlobalAssignment& o) const { return values == o.values; }
};

/**
 * All global assignments, in canonical order: lexicographic over the tuple
 * of chosen 1-rays per context, contexts in scenario order. `max_threads`
 * 0 means automatic; 1 forces the serial reference path. The output does
 * not depend on the thread count.
 */
std::vector<GlobalAssignment> enumerate_assignments(const Scenario& scenario,
                                                    int max_threads = 0);

/// Serial reference enumerator, kept for testing the parallel path against.
std::vector<GlobalAssignment> enumerate_assignments_serial(const Scenario& scenario);

/// True iff v is total and one-hot in every context. Independent checker.
bool verify_assignment(const Scenario& scenario, const GlobalAssignment& v);

/// |A| without materializing the assignment list.
std::size_t count_assignments(const Scenario& scenario);

/// Worker cap from the CTX_THREADS environment variable (0 = automatic).
int env_thread_cap();

}  // namespace ctx

#endif
