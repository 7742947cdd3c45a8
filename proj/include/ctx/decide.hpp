#ifndef CTX_DECIDE_HPP
#define CTX_DECIDE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ctx/assignments.hpp"
#include "ctx/linalg.hpp"
#include "ctx/scenario.hpp"

namespace ctx {

struct ZeroStateError : std::runtime_error {
    ZeroStateError() : std::runtime_error("state must be nonzero") {}
};
struct NotThreeDimensionalError : std::runtime_error {
    NotThreeDimensionalError()
        : std::runtime_error("the pairwise procedure requires dimension 3") {}
};

/// Exact outcome probabilities of a pure state, one row per context.
struct EmpiricalModel {
    RayVector state;
    std::vector<std::vector<Rat>> rows;  // rows[context][position in context]
};

EmpiricalModel empirical_model(const Scenario& scenario, const RayVector& state);

/// Ray ids with probability 0 under the state: Z = { r : <state, r> = 0 }.
std::vector<std::size_t> possible_supports(const Scenario& scenario, const RayVector& state);

struct StateCheck {
    bool strongly_contextual = false;
    // When not strongly contextual: an assignment whose 1-rays all have
    // nonzero overlap with the state.
    std::optional<std::size_t> witness_assignment;
};

StateCheck check_state(const Scenario& scenario, const std::vector<GlobalAssignment>& assignments,
                       const RayVector& state);

enum class PairSituation { S1_Orthogonal, S2_SharedContextRay, S3_General };

struct PairDiagnosis {
    std::size_t ray_a = 0, ray_b = 0;
    PairSituation situation = PairSituation::S3_General;
    // S2: the shared ray orthogonal to both. S1: the basis completion ray.
    std::optional<std::size_t> orthogonal_ray;
    bool excluded = false;  // the intersection line cannot be strongly contextual
    // Index of an assignment with no 1-ray in the spanned plane, when excluded.
    std::optional<std::size_t> excluding_assignment;
    // Set when the shortcut argument for S1/S2 and the span test disagree.
    bool shortcut_disagrees = false;
};

/// Classifies a ray pair and runs the rigorous span-exclusion test (d = 3).
PairDiagnosis line_excluded(const Scenario& scenario,
                            const std::vector<GlobalAssignment>& assignments, std::size_t ray_a,
                            std::size_t ray_b);

enum class Verdict { NoStronglyContextualState, WitnessStates, AllStatesStronglyContextual };
enum class Method { General, Specialized3d };

struct AnalysisReport {
    Verdict verdict = Verdict::NoStronglyContextualState;
    std::vector<RayVector> witnesses;
    std::size_t assignment_count = 0;
    std::vector<PairDiagnosis> diagnostics;
    Method method = Method::General;
};

/**
 * 3D decision via the pairwise procedure: candidate states are the
 * orthocomplement lines of all ray pairs, plus the full plane u-perp for
 * any ray u that is 1-valued in every assignment. `max_threads` as in
 * enumerate_assignments; 1 forces the serial pair loop.
 */
AnalysisReport decide_3d(const Scenario& scenario,
                         const std::vector<GlobalAssignment>& assignments, int max_threads = 0);

/**
 * Any-dimension decision: searches choice functions picking one 1-ray per
 * assignment while tracking the exact span of the picks; a branch whose
 * span stays below full rank yields witness directions from the
 * orthocomplement.
 */
AnalysisReport decide_general(const Scenario& scenario,
                              const std::vector<GlobalAssignment>& assignments);

const char* to_string(Verdict v);
const char* to_string(Method m);
const char* to_string(PairSituation s);

}  // namespace ctx

#endif
