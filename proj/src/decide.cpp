#include "ctx/decide.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ctx {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::NoStronglyContextualState: return "NoStronglyContextualState";
        case Verdict::WitnessStates: return "WitnessStates";
        case Verdict::AllStatesStronglyContextual: return "AllStatesStronglyContextual";
    }
    return "?";
}

const char* to_string(Method m) {
    return m == Method::General ? "general" : "specialized3d";
}

const char* to_string(PairSituation s) {
    switch (s) {
        case PairSituation::S1_Orthogonal: return "S1_orthogonal";
        case PairSituation::S2_SharedContextRay: return "S2_shared_context_ray";
        case PairSituation::S3_General: return "S3_general";
    }
    return "?";
}

EmpiricalModel empirical_model(const Scenario& scenario, const RayVector& state) {
    if (state.dim() != scenario.dimension)
        throw DimensionMismatchError("state dimension does not match the scenario");
    const Int norm = dot(state, state);
    if (norm == 0) throw ZeroStateError();

    EmpiricalModel m;
    m.state = state;
    for (const Context& c : scenario.contexts) {
        std::vector<Rat> row;
        row.reserve(c.ray_ids.size());
        for (std::size_t id : c.ray_ids) {
            const RayVector& r = scenario.rays[id].vector;
            const Int overlap = dot(state, r);
            row.push_back(Rat(overlap * overlap) / Rat(norm * dot(r, r)));
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

std::vector<std::size_t> possible_supports(const Scenario& scenario, const RayVector& state) {
    if (state.dim() != scenario.dimension)
        throw DimensionMismatchError("state dimension does not match the scenario");
    if (dot(state, state) == 0) throw ZeroStateError();
    std::vector<std::size_t> zero;
    for (const Ray& r : scenario.rays)
        if (dot(state, r.vector) == 0) zero.push_back(r.id);
    return zero;
}

StateCheck check_state(const Scenario& scenario, const std::vector<GlobalAssignment>& assignments,
                       const RayVector& state) {
    if (dot(state, state) == 0) throw ZeroStateError();
    std::vector<bool> in_zero_set(scenario.rays.size(), false);
    for (const Ray& r : scenario.rays)
        if (dot(state, r.vector) == 0) in_zero_set[r.id] = true;

    for (std::size_t i = 0; i < assignments.size(); ++i) {
        bool blocked = false;
        for (std::size_t one : assignments[i].ones)
            if (in_zero_set[one]) {
                blocked = true;
                break;
            }
        if (!blocked) return StateCheck{false, i};  // every 1-event is possible
    }
    return StateCheck{true, std::nullopt};
}

namespace {

// Shared ray of the contexts containing a and the contexts containing b.
std::optional<std::size_t> shared_context_ray(const Scenario& scenario, std::size_t a,
                                              std::size_t b) {
    std::set<std::size_t> near_a;
    for (std::size_t c : scenario.contexts_of(a))
        for (std::size_t r : scenario.contexts[c].ray_ids)
            if (r != a && r != b) near_a.insert(r);
    for (std::size_t c : scenario.contexts_of(b))
        for (std::size_t r : scenario.contexts[c].ray_ids)
            if (r != a && r != b && near_a.count(r)) return r;
    return std::nullopt;
}

}  // namespace

PairDiagnosis line_excluded(const Scenario& scenario,
                            const std::vector<GlobalAssignment>& assignments, std::size_t ray_a,
                            std::size_t ray_b) {
    if (scenario.dimension != 3) throw NotThreeDimensionalError();
    const RayVector& va = scenario.rays[ray_a].vector;
    const RayVector& vb = scenario.rays[ray_b].vector;
    const RayVector normal = cross3(va, vb);  // throws ParallelRaysError

    PairDiagnosis d;
    d.ray_a = ray_a;
    d.ray_b = ray_b;

    std::vector<bool> in_plane(scenario.rays.size(), false);
    for (const Ray& r : scenario.rays)
        if (dot(normal, r.vector) == 0) in_plane[r.id] = true;

    // The rigorous criterion: some assignment has no 1-ray inside the plane
    // spanned by the pair, so the intersection line escapes its E_i.
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        bool hit = false;
        for (std::size_t one : assignments[i].ones)
            if (in_plane[one]) {
                hit = true;
                break;
            }
        if (!hit) {
            d.excluded = true;
            d.excluding_assignment = i;
            break;
        }
    }

    if (dot(va, vb) == 0) {
        d.situation = PairSituation::S1_Orthogonal;
        // The third basis direction completes the pair; named when some ray
        // of the scenario points along it.
        for (const Ray& r : scenario.rays)
            if (r.vector == normal) {
                d.orthogonal_ray = r.id;
                break;
            }
    } else if (auto shared = shared_context_ray(scenario, ray_a, ray_b)) {
        d.situation = PairSituation::S2_SharedContextRay;
        d.orthogonal_ray = shared;
    } else {
        d.situation = PairSituation::S3_General;
    }

    // The shortcut argument claims exclusion whenever some assignment gives
    // the both-orthogonal ray the value 1; flag it if the span test differs.
    if (d.orthogonal_ray) {
        bool shortcut = false;
        for (const GlobalAssignment& a : assignments)
            if (a.values[*d.orthogonal_ray] == 1) {
                shortcut = true;
                break;
            }
        d.shortcut_disagrees = shortcut && !d.excluded;
    }
    return d;
}

namespace {

std::vector<PairDiagnosis> analyze_pairs_serial(const Scenario& scenario,
                                                const std::vector<GlobalAssignment>& assignments,
                                                const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<PairDiagnosis> out(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k)
        out[k] = line_excluded(scenario, assignments, pairs[k].first, pairs[k].second);
    return out;
}

std::vector<PairDiagnosis> analyze_pairs_parallel(const Scenario& scenario,
                                                  const std::vector<GlobalAssignment>& assignments,
                                                  const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                                  int threads) {
    std::vector<PairDiagnosis> out(pairs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
#endif
    for (std::size_t k = 0; k < pairs.size(); ++k)
        out[k] = line_excluded(scenario, assignments, pairs[k].first, pairs[k].second);
    return out;
}

void finalize_witnesses(AnalysisReport& report) {
    std::sort(report.witnesses.begin(), report.witnesses.end());
    report.witnesses.erase(std::unique(report.witnesses.begin(), report.witnesses.end()),
                           report.witnesses.end());
    if (report.assignment_count == 0)
        report.verdict = Verdict::AllStatesStronglyContextual;
    else
        report.verdict = report.witnesses.empty() ? Verdict::NoStronglyContextualState
                                                  : Verdict::WitnessStates;
}

}  // namespace

AnalysisReport decide_3d(const Scenario& scenario,
                         const std::vector<GlobalAssignment>& assignments, int max_threads) {
    if (scenario.dimension != 3) throw NotThreeDimensionalError();
    if (!scenario.completed()) throw IncompleteScenarioError();

    AnalysisReport report;
    report.method = Method::Specialized3d;
    report.assignment_count = assignments.size();
    if (assignments.empty()) {
        report.verdict = Verdict::AllStatesStronglyContextual;
        return report;
    }

    // A ray 1-valued in every assignment puts its whole orthogonal plane in
    // the intersection; report the plane through two spanning directions.
    for (const Ray& r : scenario.rays) {
        bool always_one = true;
        for (const GlobalAssignment& a : assignments)
            if (a.values[r.id] != 1) {
                always_one = false;
                break;
            }
        if (always_one) {
            Subspace line = Subspace::span({r.vector}, 3);
            for (const RayVector& w : orthocomplement(line).basis())
                report.witnesses.push_back(w);
        }
    }

    // Synthetic rays of different contexts may share a direction; only
    // non-parallel pairs define an intersection line.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < scenario.rays.size(); ++i)
        for (std::size_t j = i + 1; j < scenario.rays.size(); ++j)
            if (scenario.rays[i].vector != scenario.rays[j].vector) pairs.emplace_back(i, j);

    if (max_threads == 0) max_threads = env_thread_cap();
    report.diagnostics = max_threads == 1
                             ? analyze_pairs_serial(scenario, assignments, pairs)
                             : analyze_pairs_parallel(scenario, assignments, pairs,
#ifdef _OPENMP
                                                      max_threads > 0 ? max_threads
                                                                      : omp_get_max_threads()
#else
                                                      1
#endif
                               );

    for (const PairDiagnosis& d : report.diagnostics)
        if (!d.excluded)
            report.witnesses.push_back(
                cross3(scenario.rays[d.ray_a].vector, scenario.rays[d.ray_b].vector));

    finalize_witnesses(report);
    return report;
}

namespace {

struct ChoiceSearch {
    const Scenario& scenario;
    std::vector<const GlobalAssignment*> order;  // by |ones| ascending
    std::set<std::pair<std::size_t, std::string>> visited;
    std::vector<RayVector>* witnesses;

    static std::string span_key(const Subspace& s) {
        std::ostringstream os;
        for (const RayVector& v : reduced_basis(s)) os << v.str() << ';';
        return os.str();
    }

    void run(std::size_t index, const Subspace& span) {
        const std::size_t d = scenario.dimension;
        if (span.rank() >= d) return;
        if (index == order.size()) {
            for (const RayVector& w : orthocomplement(span).basis()) witnesses->push_back(w);
            return;
        }
        if (span.rank() == d - 1) {
            // The complement is a single line; no further branching can help.
            const RayVector line = orthocomplement(span).basis()[0];
            for (std::size_t i = index; i < order.size(); ++i) {
                bool hit = false;
                for (std::size_t one : order[i]->ones)
                    if (dot(line, scenario.rays[one].vector) == 0) {
                        hit = true;
                        break;
                    }
                if (!hit) return;
            }
            witnesses->push_back(line);
            return;
        }
        if (!visited.insert({index, span_key(span)}).second) return;

        // Picks in canonical ray order.
        std::vector<std::size_t> picks = order[index]->ones;
        std::sort(picks.begin(), picks.end(), [&](std::size_t a, std::size_t b) {
            return scenario.rays[a].vector < scenario.rays[b].vector;
        });
        for (std::size_t pick : picks) {
            std::vector<RayVector> next = span.basis();
            next.push_back(scenario.rays[pick].vector);
            run(index + 1, Subspace::span(next, d));
        }
    }
};

}  // namespace

AnalysisReport decide_general(const Scenario& scenario,
                              const std::vector<GlobalAssignment>& assignments) {
    if (!scenario.completed()) throw IncompleteScenarioError();

    AnalysisReport report;
    report.method = Method::General;
    report.assignment_count = assignments.size();
    if (assignments.empty()) {
        report.verdict = Verdict::AllStatesStronglyContextual;
        return report;
    }

    ChoiceSearch search{scenario, {}, {}, &report.witnesses};
    for (const GlobalAssignment& a : assignments) search.order.push_back(&a);
    std::stable_sort(search.order.begin(), search.order.end(),
                     [](const GlobalAssignment* a, const GlobalAssignment* b) {
                         return a->ones.size() < b->ones.size();
                     });
    search.run(0, Subspace::span({}, scenario.dimension));

    finalize_witnesses(report);
    return report;
}

}  // namespace ctx
