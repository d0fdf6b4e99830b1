#pragma once

// Exact rational linear algebra and the hyperplane predicates used by the
// T-shape search. Nothing in here touches floating point.

#include <optional>
#include <stdexcept>
#include <vector>

#include "centerpole/rational.hpp"

namespace centerpole {

using RationalMatrix = std::vector<std::vector<Rational>>;  // row-major

/// Thrown by routines that need a full-dimensional point configuration.
class DegenerateConfiguration : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Rank by fraction-exact Gaussian elimination.
std::size_t rank(RationalMatrix rows);
std::size_t rank(const std::vector<RationalPoint>& vectors);

/// Basis of {v : row . v = 0 for every row}; `cols` is the ambient dimension.
std::vector<RationalPoint> nullspace(RationalMatrix rows, std::size_t cols);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> invert(const RationalMatrix& m);

RationalPoint multiply(const RationalMatrix& m, const RationalPoint& v);

/// -1 for no points, otherwise the dimension of the affine hull.
int affine_hull_dim(const std::vector<RationalPoint>& points);

/// {x : normal . x = offset}, scaled so the first nonzero normal entry is 1.
class Hyperplane {
public:
    Hyperplane(RationalPoint normal, Rational offset);

    [[nodiscard]] const RationalPoint& normal() const noexcept { return normal_; }
    [[nodiscard]] const Rational& offset() const noexcept { return offset_; }
    [[nodiscard]] std::size_t dim() const noexcept { return normal_.dim(); }
    /// normal . p - offset
    [[nodiscard]] Rational evaluate(const RationalPoint& p) const;
    [[nodiscard]] bool contains(const RationalPoint& p) const { return evaluate(p) == 0; }

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
        return a.normal_ == b.normal_ && a.offset_ == b.offset_;
    }
    friend std::strong_ordering operator<=>(const Hyperplane& a, const Hyperplane& b);

private:
    RationalPoint normal_;
    Rational offset_;
};

std::ostream& operator<<(std::ostream& os, const Hyperplane& h);

enum class HalfspaceSide { negative, on, positive };

HalfspaceSide side_of(const Hyperplane& h, const RationalPoint& p);

/// True when some points lie strictly on opposite sides of h.
bool separates(const Hyperplane& h, const std::vector<RationalPoint>& points);

/// h meets the set and leaves it in one closed half-space.
bool is_support_hyperplane(const Hyperplane& h, const std::vector<RationalPoint>& points);

/// Pairwise distinct with linearly independent normals.
bool in_general_position(const std::vector<Hyperplane>& hyperplanes);

/// The hyperplane through d affinely independent points of R^d, if they are independent.
std::optional<Hyperplane> hyperplane_through(const std::vector<RationalPoint>& points);

/// Some hyperplane containing every point; nullopt for full-dimensional sets.
std::optional<Hyperplane> containing_hyperplane(const std::vector<RationalPoint>& points, std::size_t dim);

/// All hyperplanes through d affinely independent points of S, sorted and
/// deduplicated. Throws DegenerateConfiguration when S is not full-dimensional.
std::vector<Hyperplane> spanned_hyperplanes(const std::vector<RationalPoint>& points);

}  // namespace centerpole
