#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace centerpole {

/// Raised when integer lattice arithmetic would leave the 64-bit range.
class LatticeOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Integer vector in Z^d. Ordering is lexicographic on the coordinates.
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(std::size_t dim) : coords_(dim, 0) {}
    explicit LatticePoint(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
    LatticePoint(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

    /// The basis vector e_axis of Z^dim.
    static LatticePoint unit(std::size_t dim, std::size_t axis);
    /// e_J = sum of e_j over j in `axes`.
    static LatticePoint indicator(std::size_t dim, std::span<const std::size_t> axes);

    [[nodiscard]] std::size_t dim() const noexcept { return coords_.size(); }
    [[nodiscard]] std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    std::int64_t& operator[](std::size_t i) { return coords_[i]; }
    [[nodiscard]] std::span<const std::int64_t> coords() const noexcept { return coords_; }

    LatticePoint& operator+=(const LatticePoint& other);
    LatticePoint& operator-=(const LatticePoint& other);

    friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
    friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) { return a -= b; }
    friend LatticePoint operator-(const LatticePoint& a);
    friend LatticePoint operator*(std::int64_t s, const LatticePoint& a);

    /// The mirror image 2c - x of this point through `center`.
    [[nodiscard]] LatticePoint reflect_through(const LatticePoint& center) const;

    /// Sup norm.
    [[nodiscard]] std::int64_t linf_norm() const;
    [[nodiscard]] std::int64_t coordinate_sum() const;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
        return a.coords_ <=> b.coords_;
    }

private:
    std::vector<std::int64_t> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

struct LatticePointHash {
    std::size_t operator()(const LatticePoint& p) const noexcept;
};

}  // namespace centerpole
