#ifndef CTX_SCENARIO_HPP
#define CTX_SCENARIO_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctx/linalg.hpp"

namespace ctx {

struct DuplicateRayError : std::runtime_error {
    explicit DuplicateRayError(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownFixtureError : std::runtime_error {
    explicit UnknownFixtureError(const std::string& name)
        : std::runtime_error("unknown fixture: " + name) {}
};

struct Ray {
    std::size_t id = 0;
    std::string label;
    RayVector vector;
    bool synthetic = false;  // added by context completion
};

/// Ordered list of mutually orthogonal ray ids; a full basis once completed.
struct Context {
    std::vector<std::size_t> ray_ids;
};

enum class ScenarioOrigin { Explicit, Derived };

struct Scenario {
    std::size_t dimension = 0;
    std::vector<Ray> rays;
    std::vector<Context> contexts;
    ScenarioOrigin origin = ScenarioOrigin::Explicit;

    const Ray& ray(std::size_t id) const { return rays.at(id); }
    bool completed() const;

    /// All contexts containing the given ray.
    std::vector<std::size_t> contexts_of(std::size_t ray_id) const;
};

/// Symmetric adjacency over non-synthetic ray ids: edge iff dot == 0.
struct OrthogonalityGraph {
    std::vector<std::vector<bool>> adjacent;  // indexed by ray id
    bool edge(std::size_t i, std::size_t j) const { return adjacent[i][j]; }
};

/// Throws DuplicateRayError if two rays share a canonical direction.
OrthogonalityGraph build_orthogonality_graph(const std::vector<Ray>& rays);

/// All maximal cliques, members sorted, cliques in lexicographic order.
std::vector<Context> derive_contexts(const OrthogonalityGraph& graph);

/**
 * Completes every rank-deficient context with mutually orthogonal synthetic
 * rays spanning its orthocomplement. Synthetic rays join only their own
 * context and carry no orthogonality relations elsewhere. Idempotent.
 * label_hints maps canonical directions to preferred labels; otherwise the
 * labels are "s1", "s2", ...
 */
Scenario complete_contexts(const Scenario& scenario,
                           const std::map<RayVector, std::string>& label_hints = {});

/// Built-in scenarios: "yu-oh", "yu-oh-completed", "cabello-18".
Scenario load_fixture(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace ctx

#endif
