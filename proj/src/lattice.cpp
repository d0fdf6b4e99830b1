#include "centerpole/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace centerpole {

namespace {

void require_same_dim(const LatticePoint& a, const LatticePoint& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("lattice point dimension mismatch: " + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()));
    }
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw LatticeOverflow("lattice coordinate overflow in addition");
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) throw LatticeOverflow("lattice coordinate overflow in subtraction");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw LatticeOverflow("lattice coordinate overflow in multiplication");
    return out;
}

LatticePoint LatticePoint::unit(std::size_t dim, std::size_t axis) {
    if (axis >= dim) throw std::out_of_range("unit vector axis out of range");
    LatticePoint e(dim);
    e.coords_[axis] = 1;
    return e;
}

LatticePoint LatticePoint::indicator(std::size_t dim, std::span<const std::size_t> axes) {
    LatticePoint e(dim);
    for (std::size_t j : axes) {
        if (j >= dim) throw std::out_of_range("indicator axis out of range");
        e.coords_[j] = 1;
    }
    return e;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other) {
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], other.coords_[i]);
    return *this;
}

LatticePoint& LatticePoint::operator-=(const LatticePoint& other) {
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_sub(coords_[i], other.coords_[i]);
    return *this;
}

LatticePoint operator-(const LatticePoint& a) {
    LatticePoint out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out.coords_[i] = checked_sub(0, a.coords_[i]);
    return out;
}

LatticePoint operator*(std::int64_t s, const LatticePoint& a) {
    LatticePoint out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out.coords_[i] = checked_mul(s, a.coords_[i]);
    return out;
}

LatticePoint LatticePoint::reflect_through(const LatticePoint& center) const {
    return 2 * center - *this;
}

std::int64_t LatticePoint::linf_norm() const {
    std::int64_t m = 0;
    for (std::int64_t c : coords_) {
        if (c == INT64_MIN) throw LatticeOverflow("lattice coordinate overflow in norm");
        m = std::max(m, c < 0 ? -c : c);
    }
    return m;
}

std::int64_t LatticePoint::coordinate_sum() const {
    std::int64_t s = 0;
    for (std::int64_t c : coords_) s = checked_add(s, c);
    return s;
}

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
    os << '(';
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i) os << ',';
        os << p[i];
    }
    return os << ')';
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ p.dim();
    for (std::int64_t c : p.coords()) {
        h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace centerpole
