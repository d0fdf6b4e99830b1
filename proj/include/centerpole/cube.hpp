#pragma once

// Combinatorics of the unit cube {0,1}^k: slices, sandwiches, the
// (x_0, x_1 + ... + x_k) projection and the parity helpers used to
// place lattice points relative to the even sublattice.

#include <array>
#include <cstdint>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "centerpole/lattice.hpp"

namespace centerpole {

/// A vertex of {0,1}^dim.
class CubePoint {
public:
    CubePoint() = default;
    explicit CubePoint(std::vector<std::uint8_t> bits);

    /// Vertex whose bits are the low `dim` bits of `mask` (bit i -> coordinate i).
    static CubePoint from_mask(std::size_t dim, std::uint64_t mask);

    [[nodiscard]] std::size_t dim() const noexcept { return bits_.size(); }
    [[nodiscard]] std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    [[nodiscard]] int weight() const;
    [[nodiscard]] LatticePoint to_lattice() const;

    friend bool operator==(const CubePoint&, const CubePoint&) = default;
    friend auto operator<=>(const CubePoint& a, const CubePoint& b) { return a.bits_ <=> b.bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

/// Binomial coefficient, zero outside 0 <= s <= k.
std::uint64_t binomial(std::int64_t k, std::int64_t s);

enum class SliceDirection { below, above };

/// Cube points of {0,1}^k whose coordinate sum is strictly below (or above) s.
struct Slice {
    int k = 0;
    std::int64_t s = 0;
    SliceDirection direction = SliceDirection::below;
    std::vector<CubePoint> points;  // sorted
};

Slice build_slice(int k, std::int64_t s, SliceDirection direction);

/// The three-layer set
///   ({-1} x 2^k_{<s}) u ({0} x 2^k_{<k}) u ({1} x 2^k_{>s})  in Z^{1+k}.
class Sandwich {
public:
    Sandwich(int k, std::int64_t s);

    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] std::int64_t s() const noexcept { return s_; }
    [[nodiscard]] std::size_t ambient_dim() const noexcept { return static_cast<std::size_t>(k_) + 1; }

    /// Layer at x_0 = level, for level in {-1, 0, 1}.
    [[nodiscard]] const std::vector<LatticePoint>& layer(int level) const;
    /// All points, sorted lexicographically.
    [[nodiscard]] const std::vector<LatticePoint>& points() const noexcept { return points_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] bool contains(const LatticePoint& p) const;

private:
    int k_;
    std::int64_t s_;
    std::array<std::vector<LatticePoint>, 3> layers_;
    std::vector<LatticePoint> points_;
    std::unordered_set<LatticePoint, LatticePointHash> index_;
};

Sandwich build_sandwich(int k, std::int64_t s);

/// 2^{k+1} - 1 - C(k, s) for 0 <= s <= k; otherwise the size is counted directly.
std::uint64_t sandwich_size(int k, std::int64_t s);

/// (x_0, x_1 + ... + x_k) for a point of Z^{1+k}.
std::pair<std::int64_t, std::int64_t> sigma0(const LatticePoint& p);
std::pair<std::int64_t, std::int64_t> sigma0(const CubePoint& p);

/// Indices of the odd coordinates of x.
std::vector<std::size_t> parity_support(const LatticePoint& x);

/// The largest point of (2Z)^d below x coordinatewise.
LatticePoint even_floor(const LatticePoint& x);

enum class LShape {
    lower_l,  // Sigma_0 image inside {(0,a),(1,a),(1,a+1)}
    upper_l,  // Sigma_0 image inside {(0,a),(0,a+1),(1,a+1)}
};

std::string_view to_string(LShape shape);

struct Facet {
    std::size_t axis = 0;  // gamma in {0..k}
    int level = 0;         // l in {0, 1}

    friend bool operator==(const Facet&, const Facet&) = default;
};

/// The three admissible Sigma_0 values of an L-shaped triple.
std::array<std::pair<std::int64_t, std::int64_t>, 3> l_triple(std::int64_t anchor, LShape shape);

/// A subset of {0,1}^{k+1} lying in one facet whose Sigma_0 image fits an L-shaped triple.
class SigmaZeroSet {
public:
    /// Validates every invariant; throws std::invalid_argument otherwise.
    SigmaZeroSet(int k, std::vector<CubePoint> points, Facet facet, std::int64_t anchor, LShape shape);

    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] const std::vector<CubePoint>& points() const noexcept { return points_; }
    [[nodiscard]] Facet facet() const noexcept { return facet_; }
    [[nodiscard]] std::int64_t anchor() const noexcept { return anchor_; }
    [[nodiscard]] LShape shape() const noexcept { return shape_; }

    /// Re-checks the invariants from scratch.
    [[nodiscard]] static bool is_valid(int k, const std::vector<CubePoint>& points, Facet facet,
                                       std::int64_t anchor, LShape shape);

private:
    int k_;
    std::vector<CubePoint> points_;
    Facet facet_;
    std::int64_t anchor_;
    LShape shape_;
};

/// One inclusion-maximal Sigma_0-set per (facet, anchor, shape), in the order
/// axis, level, anchor, shape (lower_l before upper_l).
std::vector<SigmaZeroSet> enumerate_maximal_sigma0_sets(int k);

}  // namespace centerpole
