#pragma once

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "centerpole/lattice.hpp"

namespace centerpole {

using Rational = mpq_class;

/// num/den in lowest terms. Throws std::domain_error when den is 0.
Rational make_rational(long num, long den);
/// Parses "p", "-p" or "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
/// Canonical "p/q" text ("p" when q = 1).
std::string to_string(const Rational& q);

int sign(const Rational& q);
Rational abs(const Rational& q);

/// Point of Q^d.
class RationalPoint {
public:
    RationalPoint() = default;
    explicit RationalPoint(std::size_t dim) : coords_(dim) {}
    explicit RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    RationalPoint(std::initializer_list<Rational> coords) : coords_(coords) {}
    explicit RationalPoint(const LatticePoint& p);

    [[nodiscard]] std::size_t dim() const noexcept { return coords_.size(); }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    [[nodiscard]] std::span<const Rational> coords() const noexcept { return coords_; }

    RationalPoint& operator+=(const RationalPoint& o);
    RationalPoint& operator-=(const RationalPoint& o);
    friend RationalPoint operator+(RationalPoint a, const RationalPoint& b) { return a += b; }
    friend RationalPoint operator-(RationalPoint a, const RationalPoint& b) { return a -= b; }
    friend RationalPoint operator-(const RationalPoint& a);
    friend RationalPoint operator*(const Rational& s, const RationalPoint& a);

    /// 2c - x.
    [[nodiscard]] RationalPoint reflect_through(const RationalPoint& center) const;
    [[nodiscard]] Rational linf_norm() const;
    [[nodiscard]] Rational dot(const RationalPoint& o) const;
    [[nodiscard]] bool is_zero() const;

    /// First coordinates [0, n).
    [[nodiscard]] RationalPoint head(std::size_t n) const;
    /// Appends one coordinate.
    [[nodiscard]] RationalPoint with_appended(const Rational& t) const;

    friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.coords_ == b.coords_; }
    friend std::strong_ordering operator<=>(const RationalPoint& a, const RationalPoint& b);

private:
    std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const RationalPoint& p);

}  // namespace centerpole
