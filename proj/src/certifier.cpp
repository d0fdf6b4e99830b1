#include "centerpole/certifier.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "centerpole/sat_solver.hpp"

namespace centerpole {

void WindowSpec::validate() const {
    if (dim == 0) throw std::invalid_argument("window dimension must be positive");
    if (inner_radius < 0 || inner_radius >= outer_radius) throw std::invalid_argument("need 0 <= r < R");
    if (!origin.coords().empty() && origin.dim() != dim) throw std::invalid_argument("origin dimension mismatch");
    for (const auto& c : centers) {
        if (c.dim() != dim) throw std::invalid_argument("center dimension mismatch");
    }
}

LatticePoint WindowSpec::resolved_origin() const { return origin.coords().empty() ? LatticePoint(dim) : origin; }

Graph Graph::from_edges(std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    Graph g;
    g.n = n;
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.adjacency.assign(n, {});
    for (const auto& [u, v] : edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    g.edges = std::move(edges);
    return g;
}

SymmetryGraph build_symmetry_graph(const WindowSpec& spec) {
    spec.validate();
    const LatticePoint origin = spec.resolved_origin();
    const std::int64_t R = spec.outer_radius;

    SymmetryGraph out;
    out.spec = spec;
    LatticePoint offset(spec.dim);
    for (std::size_t i = 0; i < spec.dim; ++i) offset[i] = -R;
    while (true) {
        if (offset.linf_norm() > spec.inner_radius) out.vertices.push_back(origin + offset);
        std::size_t i = spec.dim;
        while (i > 0 && offset[i - 1] == R) {
            offset[i - 1] = -R;
            --i;
        }
        if (i == 0) break;
        ++offset[i - 1];
    }

    std::unordered_map<LatticePoint, std::uint32_t, LatticePointHash> index;
    index.reserve(out.vertices.size());
    for (std::uint32_t v = 0; v < out.vertices.size(); ++v) index.emplace(out.vertices[v], v);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t v = 0; v < out.vertices.size(); ++v) {
        for (const auto& c : spec.centers) {
            const LatticePoint mirror = out.vertices[v].reflect_through(c);
            const auto it = index.find(mirror);
            if (it != index.end() && it->second > v) edges.emplace_back(v, it->second);
        }
    }
    out.graph = Graph::from_edges(out.vertices.size(), std::move(edges));
    return out;
}

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::forced: return "Forced";
        case VerdictKind::colorable: return "Colorable";
        case VerdictKind::unknown: return "Unknown";
    }
    return "Unknown";
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring, int k) {
    if (coloring.size() != g.n) return false;
    for (int c : coloring) {
        if (c < 0 || c >= k) return false;
    }
    return std::all_of(g.edges.begin(), g.edges.end(),
                       [&](const auto& e) { return coloring[e.first] != coloring[e.second]; });
}

namespace {

std::vector<std::vector<std::uint32_t>> connected_components(const Graph& g) {
    std::vector<std::vector<std::uint32_t>> comps;
    std::vector<char> visited(g.n, 0);
    for (std::uint32_t s = 0; s < g.n; ++s) {
        if (visited[s]) continue;
        std::vector<std::uint32_t> comp{s};
        visited[s] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            for (std::uint32_t u : g.adjacency[comp[head]]) {
                if (!visited[u]) {
                    visited[u] = 1;
                    comp.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

WindowVerdict decide_k_colorable(const Graph& g, int k, std::uint64_t budget) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    WindowVerdict verdict;
    verdict.stats.vertices = g.n;
    verdict.stats.edges = g.edges.size();

    auto finish = [&](VerdictKind kind) {
        verdict.kind = kind;
        verdict.stats.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return verdict;
    };

    const auto comps = connected_components(g);
    verdict.stats.components = comps.size();
    std::vector<int> coloring(g.n, 0);
    std::vector<std::uint32_t> local(g.n, 0);
    bool unknown = false;

    for (const auto& comp : comps) {
        if (comp.size() == 1) continue;  // isolated vertex keeps color 0
        if (k == 1) return finish(VerdictKind::forced);
        for (std::uint32_t i = 0; i < comp.size(); ++i) local[comp[i]] = i;
        const auto var = [k](std::uint32_t v, int c) { return static_cast<int>(v) * k + c + 1; };

        sat::Solver solver(static_cast<int>(comp.size()) * k);
        for (std::uint32_t i = 0; i < comp.size(); ++i) {
            std::vector<int> some;
            for (int c = 0; c < k; ++c) some.push_back(var(i, c));
            solver.add_clause(some);
            for (int a = 0; a < k; ++a) {
                for (int b = a + 1; b < k; ++b) solver.add_clause({-var(i, a), -var(i, b)});
            }
            for (std::uint32_t u : g.adjacency[comp[i]]) {
                const std::uint32_t j = local[u];
                if (j <= i) continue;
                for (int c = 0; c < k; ++c) solver.add_clause({-var(i, c), -var(j, c)});
            }
        }
        // color symmetry: the first vertex takes 0 and its first neighbor 1
        solver.add_clause({var(0, 0)});
        solver.add_clause({var(local[g.adjacency[comp[0]].front()], 1)});

        std::uint64_t remaining = 0;
        if (budget != 0) {
            if (verdict.stats.decisions >= budget) {
                unknown = true;
                break;
            }
            remaining = budget - verdict.stats.decisions;
        }
        const sat::Result result = solver.solve(remaining);
        verdict.stats.decisions += solver.stats().decisions;
        verdict.stats.conflicts += solver.stats().conflicts;
        if (result == sat::Result::unsatisfiable) return finish(VerdictKind::forced);
        if (result == sat::Result::unknown) {
            unknown = true;
            break;
        }
        for (std::uint32_t i = 0; i < comp.size(); ++i) {
            for (int c = 0; c < k; ++c) {
                if (solver.model_value(var(i, c))) {
                    coloring[comp[i]] = c;
                    break;
                }
            }
        }
    }

    if (unknown) return finish(VerdictKind::unknown);
    if (!is_proper_coloring(g, coloring, k)) throw std::logic_error("solver produced an improper coloring");
    verdict.witness = std::move(coloring);
    return finish(VerdictKind::colorable);
}

std::vector<std::optional<std::int64_t>> witness_axis_periods(const SymmetryGraph& g, const std::vector<int>& witness,
                                                              std::int64_t max_period) {
    if (witness.size() != g.vertices.size()) throw std::invalid_argument("witness size does not match the graph");
    std::unordered_map<LatticePoint, std::uint32_t, LatticePointHash> index;
    for (std::uint32_t v = 0; v < g.vertices.size(); ++v) index.emplace(g.vertices[v], v);

    std::vector<std::optional<std::int64_t>> periods(g.spec.dim);
    for (std::size_t axis = 0; axis < g.spec.dim; ++axis) {
        for (std::int64_t p = 1; p <= max_period; ++p) {
            bool consistent = true;
            bool compared = false;
            for (std::uint32_t v = 0; v < g.vertices.size() && consistent; ++v) {
                LatticePoint shifted = g.vertices[v];
                shifted[axis] += p;
                const auto it = index.find(shifted);
                if (it == index.end()) continue;
                compared = true;
                consistent = witness[v] == witness[it->second];
            }
            if (consistent && compared) {
                periods[axis] = p;
                break;
            }
        }
    }
    return periods;
}

std::int64_t schedule_outer_radius(const std::vector<LatticePoint>& centers, std::int64_t r, int r_factor) {
    std::int64_t max_norm = 0;
    for (const auto& c : centers) max_norm = std::max(max_norm, c.linf_norm());
    return checked_mul(r_factor, checked_add(checked_add(r, max_norm), 1));
}

std::vector<ScheduleRow> certify_schedule(const std::vector<LatticePoint>& centers, int k,
                                          const std::vector<std::int64_t>& r_list, int r_factor,
                                          std::uint64_t budget) {
    if (r_factor < 2) throw std::invalid_argument("R factor must be at least 2");
    if (centers.empty()) throw std::invalid_argument("at least one center is required");
    std::vector<ScheduleRow> rows;
    for (std::int64_t r : r_list) {
        WindowSpec spec;
        spec.dim = centers.front().dim();
        spec.inner_radius = r;
        spec.outer_radius = schedule_outer_radius(centers, r, r_factor);
        spec.centers = centers;
        const SymmetryGraph g = build_symmetry_graph(spec);
        ScheduleRow row{r, spec.outer_radius, decide_k_colorable(g.graph, k, budget), {}};
        if (row.verdict.witness) row.periods = witness_axis_periods(g, *row.verdict.witness, spec.outer_radius);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string export_dimacs(const Graph& g, int k, const std::vector<std::string>& comments) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    std::ostringstream body;
    std::size_t clauses = 0;
    const auto var = [k](std::size_t v, int c) { return static_cast<long long>(v) * k + c + 1; };
    for (std::size_t v = 0; v < g.n; ++v) {
        for (int c = 0; c < k; ++c) body << var(v, c) << ' ';
        body << "0\n";
        ++clauses;
        for (int a = 0; a < k; ++a) {
            for (int b = a + 1; b < k; ++b) {
                body << -var(v, a) << ' ' << -var(v, b) << " 0\n";
                ++clauses;
            }
        }
    }
    for (const auto& [u, v] : g.edges) {
        for (int c = 0; c < k; ++c) {
            body << -var(u, c) << ' ' << -var(v, c) << " 0\n";
            ++clauses;
        }
    }
    std::ostringstream out;
    for (const auto& line : comments) out << "c " << line << '\n';
    out << "p cnf " << g.n * static_cast<std::size_t>(k) << ' ' << clauses << '\n' << body.str();
    return out.str();
}

std::string export_dimacs(const SymmetryGraph& g, int k) {
    std::ostringstream centers;
    for (const auto& c : g.spec.centers) centers << ' ' << c;
    std::vector<std::string> comments{
        "centerpole symmetry graph",
        "dim " + std::to_string(g.spec.dim) + " r " + std::to_string(g.spec.inner_radius) + " R " +
            std::to_string(g.spec.outer_radius) + " origin " + [&] {
                std::ostringstream o;
                o << g.spec.resolved_origin();
                return o.str();
            }(),
        "centers" + centers.str(),
        "vertices " + std::to_string(g.graph.n) + " edges " + std::to_string(g.graph.edges.size()) + " colors " +
            std::to_string(k),
        "variable v*k+c+1 means vertex v (lexicographic order) has color c",
    };
    return export_dimacs(g.graph, k, comments);
}

}  // namespace centerpole
