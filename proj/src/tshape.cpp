#include "centerpole/tshape.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace centerpole {

namespace {

std::size_t common_dim(const std::vector<RationalPoint>& points) {
    if (points.empty()) return 0;
    const std::size_t d = points.front().dim();
    for (const auto& p : points) {
        if (p.dim() != d) throw std::invalid_argument("points have mixed dimensions");
    }
    if (d == 0) throw std::invalid_argument("points must have positive dimension");
    return d;
}

std::vector<std::size_t> first_cover(const std::vector<RationalPoint>& points, const std::vector<Hyperplane>& hs) {
    std::vector<std::size_t> out(points.size(), hs.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t i = 0; i < hs.size(); ++i) {
            if (hs[i].contains(points[j])) {
                out[j] = i;
                break;
            }
        }
    }
    return out;
}

class Search {
public:
    Search(const std::vector<RationalPoint>& points, std::size_t dim)
        : points_(points), dim_(dim), budget_(hyperplane_budget(dim)), candidates_(spanned_hyperplanes(points)) {}

    bool run(const std::vector<std::size_t>& residual) {
        ++nodes_;
        if (residual.empty()) return true;
        if (chosen_.size() == budget_) return false;

        std::vector<RationalPoint> rest;
        rest.reserve(residual.size());
        for (std::size_t j : residual) rest.push_back(points_[j]);

        // A hyperplane through all remaining points closes the cover at once.
        RationalMatrix diffs;
        for (std::size_t j = 1; j < rest.size(); ++j) {
            const RationalPoint v = rest[j] - rest[0];
            diffs.emplace_back(v.coords().begin(), v.coords().end());
        }
        for (const auto& w : nullspace(std::move(diffs), dim_)) {
            if (independent_of_prefix(w)) {
                chosen_.emplace_back(w, w.dot(rest[0]));
                return true;
            }
        }
        if (chosen_.size() + 1 == budget_) return false;

        for (const auto& h : candidates_) {
            if (!independent_of_prefix(h.normal())) continue;
            std::vector<std::size_t> off;
            bool meets = false;
            for (std::size_t j : residual) {
                if (h.contains(points_[j])) {
                    meets = true;
                } else {
                    off.push_back(j);
                }
            }
            if (!meets || separates(h, rest)) continue;
            chosen_.push_back(h);
            if (run(off)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    [[nodiscard]] const std::vector<Hyperplane>& chosen() const { return chosen_; }
    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

private:
    bool independent_of_prefix(const RationalPoint& normal) const {
        std::vector<RationalPoint> normals;
        for (const auto& h : chosen_) normals.push_back(h.normal());
        normals.push_back(normal);
        return rank(normals) == normals.size();
    }

    const std::vector<RationalPoint>& points_;
    std::size_t dim_;
    std::size_t budget_;
    std::vector<Hyperplane> candidates_;
    std::vector<Hyperplane> chosen_;
    std::uint64_t nodes_ = 0;
};

TShapeVerdict yes(const std::vector<RationalPoint>& points, std::vector<Hyperplane> hs, std::uint64_t nodes) {
    TShapeVerdict v;
    v.t_shaped = true;
    v.nodes = nodes;
    auto assignment = first_cover(points, hs);
    v.certificate = TShapeCertificate{std::move(hs), std::move(assignment)};
    return v;
}

}  // namespace

bool is_in_Tn(const RationalPoint& x) {
    const std::size_t n = x.dim();
    if (n == 0) return false;
    if (x[n - 1] == 0) return true;
    if (x[n - 1] < 0 || n == 1) return false;
    return is_in_Tn(x.head(n - 1));
}

TShapeVerdict is_t_shaped(const std::vector<RationalPoint>& points) {
    if (points.empty()) return yes(points, {}, 0);
    const std::size_t d = common_dim(points);
    if (d == 1) {
        TShapeVerdict v;
        v.note = "a nonempty subset of R^1 is never T-shaped";
        return v;
    }
    if (affine_hull_dim(points) < static_cast<int>(d)) {
        return yes(points, {*containing_hyperplane(points, d)}, 0);
    }

    Search search(points, d);
    std::vector<std::size_t> all(points.size());
    for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
    if (search.run(all)) return yes(points, search.chosen(), search.nodes());

    TShapeVerdict v;
    v.nodes = search.nodes();
    v.note = "no certificate found under spanned-hyperplane search";
    return v;
}

bool verify_certificate(const std::vector<RationalPoint>& points, const TShapeCertificate& cert, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const std::size_t d = common_dim(points);
    const auto& hs = cert.hyperplanes;
    if (!points.empty() && hs.size() > hyperplane_budget(d)) return fail("more hyperplanes than the dimension allows");
    for (const auto& h : hs) {
        if (!points.empty() && h.dim() != d) return fail("hyperplane dimension mismatch");
    }
    if (!in_general_position(hs)) return fail("hyperplanes are not in general position");
    if (cert.assignment.size() != points.size()) return fail("assignment size mismatch");

    const auto expected = first_cover(points, hs);
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (expected[j] == hs.size()) return fail("a point lies on no hyperplane");
        if (cert.assignment[j] != expected[j]) return fail("assignment is not the first covering hyperplane");
    }
    for (std::size_t i = 0; i < hs.size(); ++i) {
        std::vector<RationalPoint> rest;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (expected[j] >= i) rest.push_back(points[j]);
        }
        if (separates(hs[i], rest)) return fail("hyperplane " + std::to_string(i) + " separates the residual set");
    }
    return true;
}

std::vector<RationalPoint> moment_curve_points(int n, const std::vector<Rational>& params) {
    if (n < 1) throw std::invalid_argument("moment curve dimension must be positive");
    std::set<Rational> seen;
    std::vector<RationalPoint> out;
    for (const auto& t : params) {
        if (!seen.insert(t).second) throw std::invalid_argument("duplicate moment-curve parameter " + to_string(t));
        RationalPoint p(static_cast<std::size_t>(n));
        Rational power = t;
        for (int i = 0; i < n; ++i) {
            p[static_cast<std::size_t>(i)] = power;
            power *= t;
        }
        out.push_back(std::move(p));
    }
    return out;
}

RationalPoint random_rational_point(std::size_t dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-100, 100);
    std::uniform_int_distribution<long> den(1, 10);
    RationalPoint p(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const long a = num(rng);
        const long b = den(rng);
        p[i] = make_rational(a, b);
    }
    return p;
}

std::vector<RationalPoint> random_rational_set(std::size_t dim, std::size_t count, std::mt19937_64& rng) {
    if (count == 0) return {};
    const int want = static_cast<int>(std::min(count - 1, dim));
    while (true) {
        std::vector<RationalPoint> pts;
        for (std::size_t j = 0; j < count; ++j) pts.push_back(random_rational_point(dim, rng));
        if (affine_hull_dim(pts) == want) return pts;
    }
}

int t_value(int n) {
    switch (n) {
        case 1: return 1;
        case 2: return 3;
        case 3: return 6;
        case 4: return 12;
        default: throw std::invalid_argument("t(R^n) is only known here for n = 1..4");
    }
}

TValueReport verify_t_value_bounds(int n, int trials, std::uint64_t seed) {
    TValueReport report;
    report.n = n;
    report.t = t_value(n);
    report.trials = trials;
    report.seed = seed;
    report.random_set_size = static_cast<std::size_t>(report.t - 1);

    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        auto pts = random_rational_set(static_cast<std::size_t>(n), report.random_set_size, rng);
        if (!is_t_shaped(pts).t_shaped) report.counterexamples.push_back(std::move(pts));
    }

    std::vector<Rational> params;
    for (int i = 1; i <= n * n - n + 1; ++i) params.emplace_back(i);
    report.witness = moment_curve_points(n, params);
    report.witness_t_shaped = is_t_shaped(report.witness).t_shaped;
    return report;
}

}  // namespace centerpole
