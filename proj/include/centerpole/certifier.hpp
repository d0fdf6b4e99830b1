#pragma once

// Finite-window evidence for the centerpole property: the lattice points of an
// l-infinity annulus joined to their mirror images 2c - x through the centers.
// A k-coloring of the window with no monochromatic mirror pair exists iff this
// symmetry graph is k-colorable.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "centerpole/lattice.hpp"

namespace centerpole {

struct WindowSpec {
    std::size_t dim = 0;
    std::int64_t outer_radius = 0;  // R
    std::int64_t inner_radius = 0;  // r
    std::vector<LatticePoint> centers;
    LatticePoint origin;  // window center; empty means 0

    /// Throws std::invalid_argument unless 0 <= r < R and all points share dim.
    void validate() const;
    [[nodiscard]] LatticePoint resolved_origin() const;
};

/// Simple undirected graph on vertices 0..n-1.
struct Graph {
    std::size_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // u < v
    std::vector<std::vector<std::uint32_t>> adjacency;

    static Graph from_edges(std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);
};

struct SymmetryGraph {
    WindowSpec spec;
    std::vector<LatticePoint> vertices;  // lexicographic
    Graph graph;
};

SymmetryGraph build_symmetry_graph(const WindowSpec& spec);

enum class VerdictKind { forced, colorable, unknown };
std::string to_string(VerdictKind kind);

struct SearchStats {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t components = 0;
    std::uint64_t decisions = 0;
    std::uint64_t conflicts = 0;
    double runtime_ms = 0.0;
};

struct WindowVerdict {
    VerdictKind kind = VerdictKind::unknown;
    std::optional<std::vector<int>> witness;  // present iff colorable
    SearchStats stats;
};

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring, int k);

/// Exact decision, one SAT search per connected component. `budget` caps the
/// total number of decisions (0 = unlimited); running out yields unknown.
WindowVerdict decide_k_colorable(const Graph& g, int k, std::uint64_t budget = 0);

/// Smallest p <= max_period per axis with witness(x) = witness(x + p e_i)
/// whenever both points are vertices; nullopt when no such p exists.
std::vector<std::optional<std::int64_t>> witness_axis_periods(const SymmetryGraph& g, const std::vector<int>& witness,
                                                              std::int64_t max_period);

struct ScheduleRow {
    std::int64_t r = 0;
    std::int64_t R = 0;
    WindowVerdict verdict;
    std::vector<std::optional<std::int64_t>> periods;  // filled for colorable rows
};

constexpr int kDefaultRFactor = 3;

/// R = r_factor * (r + max ||c|| + 1) for each r.
std::int64_t schedule_outer_radius(const std::vector<LatticePoint>& centers, std::int64_t r, int r_factor);

std::vector<ScheduleRow> certify_schedule(const std::vector<LatticePoint>& centers, int k,
                                          const std::vector<std::int64_t>& r_list, int r_factor = kDefaultRFactor,
                                          std::uint64_t budget = 0);

/// One-hot CNF: variable v*k + c + 1 says vertex v has color c.
std::string export_dimacs(const SymmetryGraph& g, int k);
std::string export_dimacs(const Graph& g, int k, const std::vector<std::string>& comments = {});

}  // namespace centerpole
