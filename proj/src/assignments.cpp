#include "ctx/assignments.hpp"

#include <algorithm>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ctx {

namespace {

constexpr std::uint8_t kUnset = 2;

struct Search {
    const Scenario& scenario;
    std::vector<std::vector<std::size_t>> ray_contexts;  // ray id -> context indices
    std::vector<std::uint8_t> values;
    std::vector<bool> satisfied;  // context has its 1
    std::size_t satisfied_count = 0;
    std::vector<GlobalAssignment>* out = nullptr;
    std::size_t count = 0;

    explicit Search(const Scenario& s) : scenario(s) {
        ray_contexts.resize(s.rays.size());
        for (std::size_t c = 0; c < s.contexts.size(); ++c)
            for (std::size_t r : s.contexts[c].ray_ids) ray_contexts[r].push_back(c);
        values.assign(s.rays.size(), kUnset);
        satisfied.assign(s.contexts.size(), false);
    }

    // Sets ray -> 1 and forces every context-mate to 0. Returns false on
    // contradiction; `trail` records touched rays/contexts for undo.
    bool assign_one(std::size_t ray, std::vector<std::size_t>& ray_trail,
                    std::vector<std::size_t>& ctx_trail) {
        if (values[ray] == 0) return false;
        if (values[ray] == kUnset) {
            values[ray] = 1;
            ray_trail.push_back(ray);
        }
        for (std::size_t c : ray_contexts[ray]) {
            if (!satisfied[c]) {
                satisfied[c] = true;
                ++satisfied_count;
                ctx_trail.push_back(c);
            }
            for (std::size_t mate : scenario.contexts[c].ray_ids) {
                if (mate == ray) continue;
                if (values[mate] == 1) return false;
                if (values[mate] == kUnset) {
                    values[mate] = 0;
                    ray_trail.push_back(mate);
                }
            }
        }
        return true;
    }

    void undo(const std::vector<std::size_t>& ray_trail,
              const std::vector<std::size_t>& ctx_trail) {
        for (std::size_t r : ray_trail) values[r] = kUnset;
        for (std::size_t c : ctx_trail) {
            satisfied[c] = false;
            --satisfied_count;
        }
    }

    // Most-constrained next context: unsatisfied, fewest unset members.
    std::size_t pick_context() const {
        std::size_t best = scenario.contexts.size();
        std::size_t best_unset = SIZE_MAX;
        for (std::size_t c = 0; c < scenario.contexts.size(); ++c) {
            if (satisfied[c]) continue;
            std::size_t unset = 0;
            for (std::size_t r : scenario.contexts[c].ray_ids)
                if (values[r] == kUnset) ++unset;
            if (unset < best_unset) {
                best_unset = unset;
                best = c;
            }
        }
        return best;
    }

    void emit() {
        ++count;
        if (!out) return;
        GlobalAssignment a;
        a.values.resize(values.size());
        for (std::size_t r = 0; r < values.size(); ++r) {
            a.values[r] = values[r] == 1 ? 1 : 0;
            if (values[r] == 1) a.ones.push_back(r);
        }
        out->push_back(std::move(a));
    }

    void dfs() {
        if (satisfied_count == scenario.contexts.size()) {
            emit();
            return;
        }
        const std::size_t c = pick_context();
        for (std::size_t r : scenario.contexts[c].ray_ids) {
            if (values[r] != kUnset) continue;
            std::vector<std::size_t> ray_trail, ctx_trail;
            if (assign_one(r, ray_trail, ctx_trail)) dfs();
            undo(ray_trail, ctx_trail);
        }
    }
};

void require_complete(const Scenario& s) {
    for (const Context& c : s.contexts)
        if (c.ray_ids.size() < s.dimension) throw IncompleteScenarioError();
}

// Chosen 1-ray per context in scenario order; the canonical sort key.
std::vector<std::size_t> choice_tuple(const Scenario& s, const GlobalAssignment& a) {
    std::vector<std::size_t> key;
    key.reserve(s.contexts.size());
    for (const Context& c : s.contexts)
        for (std::size_t r : c.ray_ids)
            if (a.values[r] == 1) {
                key.push_back(r);
                break;
            }
    return key;
}

void canonical_sort(const Scenario& s, std::vector<GlobalAssignment>& list) {
    std::sort(list.begin(), list.end(), [&](const GlobalAssignment& a, const GlobalAssignment& b) {
        return choice_tuple(s, a) < choice_tuple(s, b);
    });
}

}  // namespace

int env_thread_cap() {
    const char* env = std::getenv("CTX_THREADS");
    if (!env) return 0;
    const int n = std::atoi(env);
    return n > 0 ? n : 0;
}

std::vector<GlobalAssignment> enumerate_assignments_serial(const Scenario& scenario) {
    require_complete(scenario);
    std::vector<GlobalAssignment> out;
    Search search(scenario);
    search.out = &out;
    search.dfs();
    canonical_sort(scenario, out);
    return out;
}

std::vector<GlobalAssignment> enumerate_assignments(const Scenario& scenario, int max_threads) {
    require_complete(scenario);
    if (scenario.contexts.empty()) return {};
    if (max_threads == 0) max_threads = env_thread_cap();

#ifdef _OPENMP
    // Partition on the first context's choice; each branch is independent.
    const std::vector<std::size_t>& first = scenario.contexts[0].ray_ids;
    std::vector<std::vector<GlobalAssignment>> parts(first.size());
    const int threads = max_threads > 0 ? max_threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::size_t i = 0; i < first.size(); ++i) {
        Search search(scenario);
        search.out = &parts[i];
        std::vector<std::size_t> ray_trail, ctx_trail;
        if (search.assign_one(first[i], ray_trail, ctx_trail)) search.dfs();
    }
    std::vector<GlobalAssignment> out;
    for (auto& p : parts)
        for (auto& a : p) out.push_back(std::move(a));
    canonical_sort(scenario, out);
    return out;
#else
    (void)max_threads;
    return enumerate_assignments_serial(scenario);
#endif
}

bool verify_assignment(const Scenario& scenario, const GlobalAssignment& v) {
    if (v.values.size() != scenario.rays.size()) throw UnknownRayIdError();
    for (const Context& c : scenario.contexts) {
        std::size_t ones = 0;
        for (std::size_t r : c.ray_ids) {
            if (r >= v.values.size()) throw UnknownRayIdError();
            if (v.values[r] == 1) ++ones;
        }
        if (ones != 1) return false;
    }
    return true;
}

std::size_t count_assignments(const Scenario& scenario) {
    require_complete(scenario);
    Search search(scenario);
    search.dfs();
    return search.count;
}

}  // namespace ctx
