#include "centerpole/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace centerpole {

namespace {

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[row], a[pivot]);
        const Rational inv = 1 / a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t j = col; j < cols; ++j) a[r][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t column_count(const RationalMatrix& rows) { return rows.empty() ? 0 : rows.front().size(); }

RationalMatrix difference_rows(const std::vector<RationalPoint>& points) {
    RationalMatrix rows;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const RationalPoint d = points[i] - points[0];
        rows.emplace_back(d.coords().begin(), d.coords().end());
    }
    return rows;
}

void require_common_dim(const std::vector<RationalPoint>& points) {
    for (const auto& p : points) {
        if (p.dim() != points.front().dim()) throw std::invalid_argument("points have mixed dimensions");
    }
}

}  // namespace

std::size_t rank(RationalMatrix rows) {
    const std::size_t cols = column_count(rows);
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");
    }
    return rref(rows, cols).size();
}

std::size_t rank(const std::vector<RationalPoint>& vectors) {
    RationalMatrix rows;
    for (const auto& v : vectors) rows.emplace_back(v.coords().begin(), v.coords().end());
    return rank(std::move(rows));
}

std::vector<RationalPoint> nullspace(RationalMatrix rows, std::size_t cols) {
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("nullspace row has wrong width");
    }
    const auto pivots = rref(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<RationalPoint> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RationalPoint v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalMatrix> invert(const RationalMatrix& m) {
    const std::size_t n = m.size();
    RationalMatrix aug(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw std::invalid_argument("invert needs a square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    const auto pivots = rref(aug, 2 * n);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    RationalMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    }
    return inv;
}

RationalPoint multiply(const RationalMatrix& m, const RationalPoint& v) {
    RationalPoint out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.dim()) throw std::invalid_argument("matrix-vector dimension mismatch");
        for (std::size_t j = 0; j < v.dim(); ++j) out[i] += m[i][j] * v[j];
    }
    return out;
}

int affine_hull_dim(const std::vector<RationalPoint>& points) {
    if (points.empty()) return -1;
    require_common_dim(points);
    return static_cast<int>(rank(difference_rows(points)));
}

Hyperplane::Hyperplane(RationalPoint normal, Rational offset) : normal_(std::move(normal)), offset_(std::move(offset)) {
    const auto coords = normal_.coords();
    const auto lead = std::find_if(coords.begin(), coords.end(), [](const Rational& c) { return c != 0; });
    if (lead == coords.end()) throw std::invalid_argument("hyperplane normal must be nonzero");
    const Rational scale = 1 / *lead;
    normal_ = scale * normal_;
    offset_ *= scale;
}

Rational Hyperplane::evaluate(const RationalPoint& p) const { return normal_.dot(p) - offset_; }

std::strong_ordering operator<=>(const Hyperplane& a, const Hyperplane& b) {
    if (auto c = a.normal_ <=> b.normal_; c != 0) return c;
    const int c = cmp(a.offset_, b.offset_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Hyperplane& h) {
    return os << "{x : " << h.normal() << " . x = " << h.offset().get_str() << '}';
}

HalfspaceSide side_of(const Hyperplane& h, const RationalPoint& p) {
    const int s = sign(h.evaluate(p));
    return s < 0 ? HalfspaceSide::negative : (s > 0 ? HalfspaceSide::positive : HalfspaceSide::on);
}

bool separates(const Hyperplane& h, const std::vector<RationalPoint>& points) {
    bool neg = false;
    bool pos = false;
    for (const auto& p : points) {
        const auto side = side_of(h, p);
        neg = neg || side == HalfspaceSide::negative;
        pos = pos || side == HalfspaceSide::positive;
    }
    return neg && pos;
}

bool is_support_hyperplane(const Hyperplane& h, const std::vector<RationalPoint>& points) {
    const bool meets = std::any_of(points.begin(), points.end(), [&](const RationalPoint& p) { return h.contains(p); });
    return meets && !separates(h, points);
}

bool in_general_position(const std::vector<Hyperplane>& hyperplanes) {
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) {
        for (std::size_t j = i + 1; j < hyperplanes.size(); ++j) {
            if (hyperplanes[i] == hyperplanes[j]) return false;
        }
    }
    std::vector<RationalPoint> normals;
    for (const auto& h : hyperplanes) normals.push_back(h.normal());
    return rank(normals) == normals.size();
}

std::optional<Hyperplane> hyperplane_through(const std::vector<RationalPoint>& points) {
    if (points.empty()) return std::nullopt;
    require_common_dim(points);
    const std::size_t dim = points.front().dim();
    if (points.size() != dim) return std::nullopt;
    const auto normals = nullspace(difference_rows(points), dim);
    if (normals.size() != 1) return std::nullopt;
    return Hyperplane(normals.front(), normals.front().dot(points.front()));
}

std::optional<Hyperplane> containing_hyperplane(const std::vector<RationalPoint>& points, std::size_t dim) {
    if (dim == 0) return std::nullopt;
    if (points.empty()) return Hyperplane(RationalPoint(LatticePoint::unit(dim, 0)), 0);
    require_common_dim(points);
    const auto normals = nullspace(difference_rows(points), dim);
    if (normals.empty()) return std::nullopt;
    return Hyperplane(normals.front(), normals.front().dot(points.front()));
}

std::vector<Hyperplane> spanned_hyperplanes(const std::vector<RationalPoint>& points) {
    if (points.empty()) throw DegenerateConfiguration("no points");
    require_common_dim(points);
    const std::size_t d = points.front().dim();
    if (affine_hull_dim(points) < static_cast<int>(d)) {
        throw DegenerateConfiguration("configuration is not full-dimensional; reduce to its affine hull first");
    }

    std::set<Hyperplane> found;
    const std::size_t n = points.size();
    std::vector<std::size_t> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<RationalPoint> subset(d);
    while (true) {
        for (std::size_t i = 0; i < d; ++i) subset[i] = points[idx[i]];
        if (auto h = hyperplane_through(subset)) found.insert(std::move(*h));
        // next d-combination of {0..n-1}
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == n - d + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return {found.begin(), found.end()};
}

}  // namespace centerpole
