#include "centerpole/cube.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace centerpole {

namespace {

constexpr int kMaxCubeDim = 30;

void require_cube_dim(int k) {
    if (k < 0) throw std::invalid_argument("cube dimension must be non-negative");
    if (k > kMaxCubeDim) throw std::invalid_argument("cube dimension " + std::to_string(k) + " too large to enumerate");
}

LatticePoint prepend(std::int64_t head, const CubePoint& tail) {
    LatticePoint p(tail.dim() + 1);
    p[0] = head;
    for (std::size_t i = 0; i < tail.dim(); ++i) p[i + 1] = tail[i];
    return p;
}

}  // namespace

CubePoint::CubePoint(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::uint8_t b : bits_) {
        if (b > 1) throw std::invalid_argument("cube point entries must be 0 or 1");
    }
}

CubePoint CubePoint::from_mask(std::size_t dim, std::uint64_t mask) {
    std::vector<std::uint8_t> bits(dim);
    for (std::size_t i = 0; i < dim; ++i) bits[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
    return CubePoint(std::move(bits));
}

int CubePoint::weight() const {
    return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

LatticePoint CubePoint::to_lattice() const {
    std::vector<std::int64_t> c(bits_.begin(), bits_.end());
    return LatticePoint(std::move(c));
}

std::uint64_t binomial(std::int64_t k, std::int64_t s) {
    if (k < 0 || s < 0 || s > k) return 0;
    s = std::min(s, k - s);
    std::uint64_t r = 1;
    for (std::int64_t i = 1; i <= s; ++i) {
        r = r * static_cast<std::uint64_t>(k - s + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

Slice build_slice(int k, std::int64_t s, SliceDirection direction) {
    require_cube_dim(k);
    Slice out{k, s, direction, {}};
    const std::uint64_t n = std::uint64_t{1} << k;
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        CubePoint p = CubePoint::from_mask(static_cast<std::size_t>(k), mask);
        const std::int64_t w = p.weight();
        if ((direction == SliceDirection::below && w < s) || (direction == SliceDirection::above && w > s)) {
            out.points.push_back(std::move(p));
        }
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

Sandwich::Sandwich(int k, std::int64_t s) : k_(k), s_(s) {
    require_cube_dim(k);
    const Slice bottom = build_slice(k, s, SliceDirection::below);
    const Slice middle = build_slice(k, k, SliceDirection::below);
    const Slice top = build_slice(k, s, SliceDirection::above);
    for (const auto& p : bottom.points) layers_[0].push_back(prepend(-1, p));
    for (const auto& p : middle.points) layers_[1].push_back(prepend(0, p));
    for (const auto& p : top.points) layers_[2].push_back(prepend(1, p));
    for (const auto& layer : layers_) points_.insert(points_.end(), layer.begin(), layer.end());
    std::sort(points_.begin(), points_.end());
    index_.insert(points_.begin(), points_.end());
}

const std::vector<LatticePoint>& Sandwich::layer(int level) const {
    if (level < -1 || level > 1) throw std::out_of_range("sandwich layer must be -1, 0 or 1");
    return layers_[static_cast<std::size_t>(level + 1)];
}

bool Sandwich::contains(const LatticePoint& p) const {
    return p.dim() == ambient_dim() && index_.contains(p);
}

Sandwich build_sandwich(int k, std::int64_t s) { return Sandwich(k, s); }

std::uint64_t sandwich_size(int k, std::int64_t s) {
    require_cube_dim(k);
    if (s >= 0 && s <= k) return (std::uint64_t{1} << (k + 1)) - 1 - binomial(k, s);
    return build_sandwich(k, s).size();
}

std::pair<std::int64_t, std::int64_t> sigma0(const LatticePoint& p) {
    if (p.dim() == 0) throw std::invalid_argument("sigma0 needs a point of dimension at least 1");
    std::int64_t tail = 0;
    for (std::size_t i = 1; i < p.dim(); ++i) tail = checked_add(tail, p[i]);
    return {p[0], tail};
}

std::pair<std::int64_t, std::int64_t> sigma0(const CubePoint& p) { return sigma0(p.to_lattice()); }

std::vector<std::size_t> parity_support(const LatticePoint& x) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i] % 2 != 0) out.push_back(i);
    }
    return out;
}

LatticePoint even_floor(const LatticePoint& x) {
    LatticePoint out = x;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (x[i] % 2 != 0) out[i] = checked_sub(x[i], 1);
    }
    return out;
}

std::string_view to_string(LShape shape) {
    return shape == LShape::lower_l ? "lowerL" : "upperL";
}

std::array<std::pair<std::int64_t, std::int64_t>, 3> l_triple(std::int64_t a, LShape shape) {
    if (shape == LShape::lower_l) return {{{0, a}, {1, a}, {1, a + 1}}};
    return {{{0, a}, {0, a + 1}, {1, a + 1}}};
}

SigmaZeroSet::SigmaZeroSet(int k, std::vector<CubePoint> points, Facet facet, std::int64_t anchor, LShape shape)
    : k_(k), points_(std::move(points)), facet_(facet), anchor_(anchor), shape_(shape) {
    if (!is_valid(k_, points_, facet_, anchor_, shape_)) {
        throw std::invalid_argument("point set is not a Sigma_0-set for the given facet, anchor and shape");
    }
    std::sort(points_.begin(), points_.end());
}

bool SigmaZeroSet::is_valid(int k, const std::vector<CubePoint>& points, Facet facet, std::int64_t anchor,
                            LShape shape) {
    if (k < 0) return false;
    if (facet.axis > static_cast<std::size_t>(k) || (facet.level != 0 && facet.level != 1)) return false;
    if (anchor < 0 || anchor > k - 1) return false;
    const auto triple = l_triple(anchor, shape);
    for (const auto& p : points) {
        if (p.dim() != static_cast<std::size_t>(k) + 1) return false;
        if (p[facet.axis] != facet.level) return false;
        if (std::find(triple.begin(), triple.end(), sigma0(p)) == triple.end()) return false;
    }
    return true;
}

std::vector<SigmaZeroSet> enumerate_maximal_sigma0_sets(int k) {
    if (k < 1) throw std::invalid_argument("maximal Sigma_0-sets need k >= 1");
    require_cube_dim(k + 1);
    const std::size_t dim = static_cast<std::size_t>(k) + 1;
    std::vector<CubePoint> cube;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) cube.push_back(CubePoint::from_mask(dim, mask));

    std::vector<SigmaZeroSet> out;
    out.reserve(dim * 2 * static_cast<std::size_t>(k) * 2);
    for (std::size_t axis = 0; axis < dim; ++axis) {
        for (int level = 0; level <= 1; ++level) {
            for (std::int64_t a = 0; a < k; ++a) {
                for (LShape shape : {LShape::lower_l, LShape::upper_l}) {
                    const auto triple = l_triple(a, shape);
                    std::vector<CubePoint> members;
                    for (const auto& p : cube) {
                        if (p[axis] != level) continue;
                        if (std::find(triple.begin(), triple.end(), sigma0(p)) != triple.end()) members.push_back(p);
                    }
                    out.emplace_back(k, std::move(members), Facet{axis, level}, a, shape);
                }
            }
        }
    }
    return out;
}

}  // namespace centerpole
