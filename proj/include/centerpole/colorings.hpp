#pragma once

// Explicit witness colorings of R^d and the three extension constructions
// that lift a coloring of X to X x R, plus a randomized scanner for
// monochromatic pairs {x, 2c - x}.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "centerpole/geometry.hpp"
#include "centerpole/rational.hpp"

namespace centerpole {

class ColoringRule {
public:
    using Eval = std::function<int(const RationalPoint&)>;
    using Label = std::function<std::string(const RationalPoint&)>;
    /// Bound on ||x - c|| for monochromatic pairs about c; nullopt when c is not protected.
    using Radius = std::function<std::optional<Rational>(const RationalPoint&)>;

    ColoringRule(std::string name, std::size_t dim, int colors, Eval eval, Label label = {}, Radius radius = {},
                 std::vector<std::string> branch_labels = {});

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] int colors() const noexcept { return colors_; }

    /// Throws std::invalid_argument on a dimension mismatch and std::logic_error
    /// if the underlying rule leaves {0..colors-1}.
    [[nodiscard]] int operator()(const RationalPoint& x) const;
    [[nodiscard]] int operator()(const LatticePoint& x) const { return (*this)(RationalPoint(x)); }

    /// Which printed case of the rule decides x.
    [[nodiscard]] std::string branch(const RationalPoint& x) const;
    /// Every label branch() can return, in printed order.
    [[nodiscard]] const std::vector<std::string>& branch_labels() const noexcept { return branch_labels_; }

    [[nodiscard]] std::optional<Rational> violation_radius(const RationalPoint& center) const;

    /// Values of the last coordinate at which the rule switches to a level coloring.
    [[nodiscard]] const std::vector<Rational>& special_levels() const noexcept { return special_levels_; }
    void set_special_levels(std::vector<Rational> levels) { special_levels_ = std::move(levels); }

private:
    std::string name_;
    std::size_t dim_;
    int colors_;
    Eval eval_;
    Label label_;
    Radius radius_;
    std::vector<std::string> branch_labels_;
    std::vector<Rational> special_levels_;
};

/// d+1 affinely independent vertices of R^d summing to zero.
class SimplexSpec {
public:
    explicit SimplexSpec(std::vector<RationalPoint> vertices);
    [[nodiscard]] const std::vector<RationalPoint>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] std::size_t dim() const noexcept { return vertices_.size() - 1; }

private:
    std::vector<RationalPoint> vertices_;
};

/// w_0 = -(1,...,1), w_i = e_i.
SimplexSpec standard_simplex(std::size_t d);

/// x != 0 gets the smallest i whose facet (the hull of all vertices but w_i)
/// is met by the ray through x; 0 gets color 0. Uses d+1 colors.
ColoringRule cone_coloring(const SimplexSpec& spec);

/// Barycentric-style coordinates: x = sum lambda_j w_j normalized by lambda_0 = 0.
std::vector<Rational> cone_coordinates(const SimplexSpec& spec, const RationalPoint& x);

/// 1 iff the first nonzero coordinate of x - c is positive; 0 at c.
ColoringRule halfspace_coloring(const RationalPoint& c);

/// Two colors, no unbounded monochromatic set symmetric about a or b.
/// Monochromatic pairs about a or b stay within ||b - a|| of the center.
ColoringRule pair_coloring(const RationalPoint& a, const RationalPoint& b);

/// (x,0) -> base(x), t < 0 -> 0, t > 0 -> 1. Needs at least 2 colors.
ColoringRule plus0_extension(const ColoringRule& base);

/// Extension to X x R protecting the extra center `apex` = (p, v) with v > 0.
/// Needs at least 3 colors.
ColoringRule plus1_extension(const ColoringRule& base, const RationalPoint& apex);

enum class Plus2Case { equal_heights, one_two, two_three, generic };
std::string to_string(Plus2Case c);

/// Which subcase a pair of apexes falls in after normalization.
Plus2Case classify_plus2(const RationalPoint& first, const RationalPoint& second);

/// Extension to X x R protecting two extra centers with positive last
/// coordinates. Needs at least 4 colors.
ColoringRule plus2_extension(const ColoringRule& base, const RationalPoint& first, const RationalPoint& second);

/// The same rule viewed as a coloring with `colors` >= rule.colors() colors.
ColoringRule widen_palette(const ColoringRule& rule, int colors);

/// Constant coloring; a scanner sanity check.
ColoringRule constant_coloring(std::size_t dim, int colors, int value = 0);

struct ScanOptions {
    Rational inner_radius = 0;
    std::size_t samples = 1000;  // per center
    std::uint64_t seed = 1;
    std::int64_t span = 16;                 // offsets drawn from [-span, span]^d
    std::vector<Rational> hint_levels;      // last coordinate snapped to these half the time
    std::size_t max_recorded = 100;
};

struct ScanViolation {
    RationalPoint x;
    RationalPoint mirror;
    std::size_t center_index = 0;
    int color = 0;
    bool within_documented_region = false;
};

struct ScanReport {
    std::string rule;
    std::vector<RationalPoint> centers;
    Rational inner_radius;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::size_t checked = 0;
    std::size_t violation_count = 0;
    std::size_t unexplained_count = 0;  // violations beyond the rule's documented radius
    std::vector<ScanViolation> violations;
};

/// Samples x with ||x - c|| > inner_radius for each center c and records every
/// monochromatic pair {x, 2c - x}.
ScanReport symmetric_pair_scan(const ColoringRule& rule, const std::vector<RationalPoint>& centers,
                               const ScanOptions& options);

}  // namespace centerpole
