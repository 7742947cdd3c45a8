#include "ctx/scenario.hpp"

#include <algorithm>
#include <map>

namespace ctx {

bool Scenario::completed() const {
    for (const Context& c : contexts)
        if (c.ray_ids.size() != dimension) return false;
    return true;
}

std::vector<std::size_t> Scenario::contexts_of(std::size_t ray_id) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < contexts.size(); ++i)
        if (std::find(contexts[i].ray_ids.begin(), contexts[i].ray_ids.end(), ray_id) !=
            contexts[i].ray_ids.end())
            out.push_back(i);
    return out;
}

OrthogonalityGraph build_orthogonality_graph(const std::vector<Ray>& rays) {
    for (std::size_t i = 0; i < rays.size(); ++i)
        for (std::size_t j = i + 1; j < rays.size(); ++j)
            if (rays[i].vector == rays[j].vector)
                throw DuplicateRayError("rays '" + rays[i].label + "' and '" + rays[j].label +
                                        "' have the same direction " + rays[i].vector.str());
    OrthogonalityGraph g;
    g.adjacent.assign(rays.size(), std::vector<bool>(rays.size(), false));
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (rays[i].synthetic) continue;
        for (std::size_t j = i + 1; j < rays.size(); ++j) {
            if (rays[j].synthetic) continue;
            if (dot(rays[i].vector, rays[j].vector) == 0)
                g.adjacent[i][j] = g.adjacent[j][i] = true;
        }
    }
    return g;
}

namespace {

void bron_kerbosch(const OrthogonalityGraph& g, std::vector<std::size_t>& clique,
                   std::vector<std::size_t> candidates, std::vector<std::size_t> excluded,
                   std::vector<Context>& out) {
    if (candidates.empty() && excluded.empty()) {
        out.push_back(Context{clique});
        return;
    }
    // Pivot on the candidate/excluded vertex with most candidate neighbours.
    std::size_t pivot = 0, best = 0;
    bool have_pivot = false;
    for (const auto& pool : {candidates, excluded}) {
        for (std::size_t u : pool) {
            std::size_t deg = 0;
            for (std::size_t v : candidates)
                if (g.edge(u, v)) ++deg;
            if (!have_pivot || deg > best) {
                pivot = u;
                best = deg;
                have_pivot = true;
            }
        }
    }
    std::vector<std::size_t> branch;
    for (std::size_t v : candidates)
        if (!g.edge(pivot, v)) branch.push_back(v);
    for (std::size_t v : branch) {
        std::vector<std::size_t> next_cand, next_excl;
        for (std::size_t u : candidates)
            if (g.edge(v, u)) next_cand.push_back(u);
        for (std::size_t u : excluded)
            if (g.edge(v, u)) next_excl.push_back(u);
        clique.push_back(v);
        bron_kerbosch(g, clique, std::move(next_cand), std::move(next_excl), out);
        clique.pop_back();
        candidates.erase(std::find(candidates.begin(), candidates.end(), v));
        excluded.push_back(v);
    }
}

}  // namespace

std::vector<Context> derive_contexts(const OrthogonalityGraph& graph) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < graph.adjacent.size(); ++i) candidates.push_back(i);
    std::vector<Context> out;
    std::vector<std::size_t> clique;
    bron_kerbosch(graph, clique, std::move(candidates), {}, out);
    for (Context& c : out) std::sort(c.ray_ids.begin(), c.ray_ids.end());
    std::sort(out.begin(), out.end(),
              [](const Context& a, const Context& b) { return a.ray_ids < b.ray_ids; });
    return out;
}

Scenario complete_contexts(const Scenario& scenario,
                           const std::map<RayVector, std::string>& label_hints) {
    Scenario out = scenario;
    std::size_t synthetic_counter = 0;
    for (const Ray& r : out.rays)
        if (r.synthetic) ++synthetic_counter;

    for (Context& c : out.contexts) {
        std::vector<RayVector> members;
        for (std::size_t id : c.ray_ids) members.push_back(out.rays[id].vector);
        Subspace s = Subspace::span(members, out.dimension);
        if (s.rank() == out.dimension) continue;
        Subspace comp = orthocomplement(s);
        // Deficiency >= 2 needs the added rays mutually orthogonal.
        std::vector<RayVector> added = comp.rank() > 1 ? orthogonalize(comp.basis()) : comp.basis();
        for (const RayVector& v : added) {
            Ray r;
            r.id = out.rays.size();
            auto hint = label_hints.find(v);
            r.label = hint != label_hints.end() ? hint->second
                                                : "s" + std::to_string(++synthetic_counter);
            r.vector = v;
            r.synthetic = true;
            c.ray_ids.push_back(r.id);
            out.rays.push_back(std::move(r));
        }
    }
    return out;
}

namespace {

Ray make_ray(std::size_t id, const std::string& label, std::vector<Int> coords,
             bool synthetic = false) {
    Ray r;
    r.id = id;
    r.label = label;
    r.vector = RayVector::canonicalize(std::move(coords));
    r.synthetic = synthetic;
    return r;
}

// The 13-ray set with its 16 contexts given explicitly: four triangles and
// twelve two-ray contexts awaiting completion.
Scenario yu_oh_base() {
    Scenario s;
    s.dimension = 3;
    s.origin = ScenarioOrigin::Explicit;
    const std::vector<std::pair<std::string, std::vector<Int>>> rays = {
        {"1", {1, 0, 0}},  {"2", {0, 1, 0}},   {"3", {0, 0, 1}},  {"4", {0, 1, -1}},
        {"5", {1, 0, -1}}, {"6", {1, -1, 0}},  {"7", {0, 1, 1}},  {"8", {1, 0, 1}},
        {"9", {1, 1, 0}},  {"A", {-1, 1, 1}},  {"B", {1, -1, 1}}, {"C", {1, 1, -1}},
        {"D", {1, 1, 1}}};
    for (std::size_t i = 0; i < rays.size(); ++i)
        s.rays.push_back(make_ray(i, rays[i].first, rays[i].second));
    const std::vector<std::vector<std::size_t>> contexts = {
        {0, 1, 2}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8},  // 1 2 3 / 1 4 7 / 2 5 8 / 3 6 9
        {3, 9},    {7, 9},    {8, 9},                 // 4 A / 8 A / 9 A
        {4, 10},   {6, 10},   {8, 10},                // 5 B / 7 B / 9 B
        {5, 11},   {6, 11},   {7, 11},                // 6 C / 7 C / 8 C
        {3, 12},   {4, 12},   {5, 12}};               // 4 D / 5 D / 6 D
    for (const auto& c : contexts) s.contexts.push_back(Context{c});
    return s;
}

const std::vector<std::pair<std::string, std::vector<Int>>>& yu_oh_primed_rays() {
    static const std::vector<std::pair<std::string, std::vector<Int>>> rays = {
        {"1'", {2, 1, 1}},    {"2'", {-1, -2, 1}}, {"3'", {1, -1, 2}},  {"4'", {-1, -2, -1}},
        {"5'", {2, 1, -1}},   {"6'", {1, -1, -2}}, {"7'", {1, 1, 2}},   {"8'", {-2, 1, -1}},
        {"9'", {-1, 2, 1}},   {"10'", {2, -1, -1}}, {"11'", {1, -2, 1}}, {"12'", {-1, -1, 2}}};
    return rays;
}

Scenario cabello_18() {
    Scenario s;
    s.dimension = 4;
    s.origin = ScenarioOrigin::Explicit;
    const std::vector<std::vector<Int>> vecs = {
        {0, 0, 0, 1}, {0, 0, 1, 0}, {1, 1, 0, 0},  {1, -1, 0, 0},   // 0..3
        {0, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, -1, 0},                  // 4..6
        {1, -1, 1, -1}, {1, -1, -1, 1}, {0, 0, 1, 1},               // 7..9
        {1, 1, 1, 1}, {0, 1, 0, -1},                                // 10..11
        {1, 0, 0, 1}, {1, 0, 0, -1},                                // 12..13
        {0, 1, -1, 0},                                              // 14
        {1, 1, -1, 1}, {1, 1, 1, -1}, {-1, 1, 1, 1}};               // 15..17
    for (std::size_t i = 0; i < vecs.size(); ++i)
        s.rays.push_back(make_ray(i, "v" + std::to_string(i + 1), vecs[i]));
    const std::vector<std::vector<std::size_t>> contexts = {
        {0, 1, 2, 3},   {0, 4, 5, 6},   {7, 8, 2, 9},   {7, 10, 6, 11}, {1, 4, 12, 13},
        {8, 10, 13, 14}, {15, 16, 3, 9}, {15, 17, 5, 11}, {16, 17, 12, 14}};
    for (const auto& c : contexts) s.contexts.push_back(Context{c});
    return s;
}

}  // namespace

Scenario load_fixture(const std::string& name) {
    if (name == "yu-oh") return yu_oh_base();
    if (name == "yu-oh-completed") {
        std::map<RayVector, std::string> hints;
        for (const auto& [label, coords] : yu_oh_primed_rays()) {
            std::vector<Int> c = coords;
            hints.emplace(RayVector::canonicalize(std::move(c)), label);
        }
        return complete_contexts(yu_oh_base(), hints);
    }
    if (name == "cabello-18") return cabello_18();
    throw UnknownFixtureError(name);
}

std::vector<std::string> fixture_names() { return {"yu-oh", "yu-oh-completed", "cabello-18"}; }

}  // namespace ctx
