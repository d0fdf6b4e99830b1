#pragma once

// T-shaped point sets. S in R^d is T-shaped when some affine map sends it into
// R x T_{d-1}; equivalently S is covered by at most d-1 hyperplanes in general
// position, each of which does not separate the points not covered earlier.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "centerpole/geometry.hpp"

namespace centerpole {

/// Membership in T_n = (R^{n-1} x {0}) u (T_{n-1} x R_+), T_0 empty; n = x.dim().
bool is_in_Tn(const RationalPoint& x);

struct TShapeCertificate {
    std::vector<Hyperplane> hyperplanes;
    /// assignment[j] = index of the first hyperplane containing point j.
    std::vector<std::size_t> assignment;
};

struct TShapeVerdict {
    bool t_shaped = false;
    std::optional<TShapeCertificate> certificate;
    std::uint64_t nodes = 0;  // search nodes visited
    std::string note;
};

/// Largest number of covering hyperplanes allowed in ambient dimension d.
inline std::size_t hyperplane_budget(std::size_t d) { return d == 0 ? 0 : d - 1; }

/// Exact decision. Candidate hyperplanes are those spanned by d points of S.
TShapeVerdict is_t_shaped(const std::vector<RationalPoint>& points);

/// Re-checks a certificate with geometry predicates only; `why` gets the first defect.
bool verify_certificate(const std::vector<RationalPoint>& points, const TShapeCertificate& cert,
                        std::string* why = nullptr);

/// (t, t^2, ..., t^n) for each parameter. Throws on duplicate parameters.
std::vector<RationalPoint> moment_curve_points(int n, const std::vector<Rational>& params);

/// Rational point with numerators in [-100, 100] and denominators in [1, 10].
RationalPoint random_rational_point(std::size_t dim, std::mt19937_64& rng);

/// `count` random points, resampled until full-dimensional (count > dim) or
/// affinely independent (count <= dim).
std::vector<RationalPoint> random_rational_set(std::size_t dim, std::size_t count, std::mt19937_64& rng);

/// t(R^n) for n = 1..4.
int t_value(int n);

struct TValueReport {
    int n = 0;
    int t = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::size_t random_set_size = 0;
    std::vector<std::vector<RationalPoint>> counterexamples;  // random sets found not T-shaped
    std::vector<RationalPoint> witness;                       // n^2 - n + 1 moment-curve points
    bool witness_t_shaped = false;

    [[nodiscard]] bool ok() const { return counterexamples.empty() && !witness_t_shaped; }
};

/// Random sets of size t(R^n) - 1 must be T-shaped; the moment-curve witness must not be.
TValueReport verify_t_value_bounds(int n, int trials, std::uint64_t seed);

}  // namespace centerpole
