#include "centerpole/colorings.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace centerpole {

namespace {

struct Decision {
    int color;
    std::string branch;
};

using Decide = std::function<Decision(const RationalPoint&)>;

ColoringRule make_rule(std::string name, std::size_t dim, int colors, Decide decide, ColoringRule::Radius radius,
                       std::vector<std::string> labels) {
    auto eval = [decide](const RationalPoint& x) { return decide(x).color; };
    auto label = [decide](const RationalPoint& x) { return decide(x).branch; };
    return ColoringRule(std::move(name), dim, colors, eval, label, std::move(radius), std::move(labels));
}

/// min(n \ used)
int smallest_unused(int n, std::initializer_list<int> used) {
    for (int c = 0; c < n; ++c) {
        if (std::find(used.begin(), used.end(), c) == used.end()) return c;
    }
    throw std::logic_error("no free color");
}

RationalPoint zero_point(std::size_t d) { return RationalPoint(d); }

void require_extension_apex(const ColoringRule& base, const RationalPoint& apex) {
    if (apex.dim() != base.dim() + 1) throw std::invalid_argument("apex must live in X x R");
    if (apex[base.dim()] <= 0) throw std::invalid_argument("apex must have a positive last coordinate");
}

int psi(const Rational& t, const Rational& v, const Rational& w) {
    if (t <= 0) return 3;
    if (t <= v) return 0;
    if (t <= w) return 1;
    return 2;
}

std::string psi_label(const Rational& t, const Rational& v, const Rational& w) {
    if (t <= 0) return "psi:t<=0";
    if (t <= v) return "psi:0<t<=v";
    if (t <= w) return "psi:v<t<=w";
    return "psi:w<t";
}

}  // namespace

ColoringRule::ColoringRule(std::string name, std::size_t dim, int colors, Eval eval, Label label, Radius radius,
                           std::vector<std::string> branch_labels)
    : name_(std::move(name)),
      dim_(dim),
      colors_(colors),
      eval_(std::move(eval)),
      label_(std::move(label)),
      radius_(std::move(radius)),
      branch_labels_(std::move(branch_labels)) {
    if (colors_ < 1) throw std::invalid_argument("a coloring needs at least one color");
    if (!eval_) throw std::invalid_argument("coloring rule without an evaluator");
}

int ColoringRule::operator()(const RationalPoint& x) const {
    if (x.dim() != dim_) throw std::invalid_argument("point dimension does not match coloring " + name_);
    const int c = eval_(x);
    if (c < 0 || c >= colors_) throw std::logic_error("coloring " + name_ + " produced color out of range");
    return c;
}

std::string ColoringRule::branch(const RationalPoint& x) const {
    if (x.dim() != dim_) throw std::invalid_argument("point dimension does not match coloring " + name_);
    return label_ ? label_(x) : std::string("rule");
}

std::optional<Rational> ColoringRule::violation_radius(const RationalPoint& center) const {
    if (!radius_ || center.dim() != dim_) return std::nullopt;
    return radius_(center);
}

SimplexSpec::SimplexSpec(std::vector<RationalPoint> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw std::invalid_argument("a simplex needs at least two vertices");
    const std::size_t d = vertices_.size() - 1;
    RationalPoint sum(d);
    for (const auto& v : vertices_) {
        if (v.dim() != d) throw std::invalid_argument("simplex in R^d needs d+1 vertices of dimension d");
        sum += v;
    }
    if (!sum.is_zero()) throw std::invalid_argument("simplex vertices must sum to zero");
    if (affine_hull_dim(vertices_) != static_cast<int>(d)) {
        throw std::invalid_argument("simplex vertices must be affinely independent");
    }
}

SimplexSpec standard_simplex(std::size_t d) {
    std::vector<RationalPoint> vs;
    RationalPoint w0(d);
    for (std::size_t i = 0; i < d; ++i) w0[i] = -1;
    vs.push_back(w0);
    for (std::size_t i = 0; i < d; ++i) vs.emplace_back(LatticePoint::unit(d, i));
    return SimplexSpec(std::move(vs));
}

std::vector<Rational> cone_coordinates(const SimplexSpec& spec, const RationalPoint& x) {
    const std::size_t d = spec.dim();
    RationalMatrix m(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[i][j] = spec.vertices()[j + 1][i];
    }
    const RationalPoint tail = multiply(*invert(m), x);
    std::vector<Rational> lambda{Rational(0)};
    lambda.insert(lambda.end(), tail.coords().begin(), tail.coords().end());
    return lambda;
}

ColoringRule cone_coloring(const SimplexSpec& spec) {
    const std::size_t d = spec.dim();
    RationalMatrix m(d, std::vector<Rational>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m[i][j] = spec.vertices()[j + 1][i];
    }
    const RationalMatrix inv = *invert(m);
    std::vector<Rational> norms;
    for (const auto& w : spec.vertices()) norms.push_back(w.linf_norm());

    auto coords = [inv](const RationalPoint& x) {
        const RationalPoint tail = multiply(inv, x);
        std::vector<Rational> lambda{Rational(0)};
        lambda.insert(lambda.end(), tail.coords().begin(), tail.coords().end());
        return lambda;
    };
    auto decide = [coords](const RationalPoint& x) {
        const auto lambda = coords(x);
        const auto it = std::min_element(lambda.begin(), lambda.end());
        const int i = static_cast<int>(it - lambda.begin());
        return Decision{i, "cone_" + std::to_string(i)};
    };
    // Both x and 2c - x in cone i forces 0 <= lambda_j(x) - lambda_i(x) <= 2(lambda_j(c) - lambda_i(c)).
    auto radius = [coords, norms](const RationalPoint& c) -> std::optional<Rational> {
        const auto lambda = coords(c);
        Rational worst = 0;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            Rational bound = 0;
            for (std::size_t j = 0; j < lambda.size(); ++j) {
                const Rational mu = lambda[j] - lambda[i];
                if (mu > 0) bound += 2 * mu * norms[j];
            }
            worst = std::max(worst, bound);
        }
        return worst + c.linf_norm();
    };
    std::vector<std::string> labels;
    for (std::size_t i = 0; i <= d; ++i) labels.push_back("cone_" + std::to_string(i));
    return make_rule("cone", d, static_cast<int>(d + 1), decide, radius, labels);
}

ColoringRule halfspace_coloring(const RationalPoint& c) {
    auto decide = [c](const RationalPoint& x) {
        for (std::size_t i = 0; i < x.dim(); ++i) {
            const int s = sign(x[i] - c[i]);
            if (s > 0) return Decision{1, "positive"};
            if (s < 0) return Decision{0, "negative"};
        }
        return Decision{0, "center"};
    };
    auto radius = [c](const RationalPoint& center) -> std::optional<Rational> {
        if (center == c) return Rational(0);
        return std::nullopt;
    };
    return make_rule("halfspace", c.dim(), 2, decide, radius, {"positive", "negative", "center"});
}

ColoringRule pair_coloring(const RationalPoint& a, const RationalPoint& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("pair coloring points differ in dimension");
    if (a == b) throw std::invalid_argument("pair coloring needs two distinct points");
    const RationalPoint mid = make_rational(1, 2) * (a + b);
    const RationalPoint u = b - a;
    std::size_t p = 0;
    while (u[p] == 0) ++p;

    // Reflection through a or b negates every f_j(y) = y_j u_p - y_p u_j, so
    // only points on the line through a and b can clash, and only near them.
    auto decide = [mid, u, p](const RationalPoint& x) {
        const RationalPoint y = x - mid;
        for (std::size_t j = 0; j < y.dim(); ++j) {
            if (j == p) continue;
            const int s = sign(y[j] * u[p] - y[p] * u[j]);
            if (s != 0) return Decision{s > 0 ? 1 : 0, "off-line"};
        }
        return Decision{y[p] > 0 ? 1 : 0, "on-line"};
    };
    const Rational reach = u.linf_norm();
    auto radius = [a, b, reach](const RationalPoint& center) -> std::optional<Rational> {
        if (center == a || center == b) return reach;
        return std::nullopt;
    };
    return make_rule("pair", a.dim(), 2, decide, radius, {"off-line", "on-line"});
}

ColoringRule plus0_extension(const ColoringRule& base) {
    if (base.colors() < 2) throw std::invalid_argument("plus0 extension needs at least 2 colors");
    const std::size_t d = base.dim();
    auto decide = [base, d](const RationalPoint& y) {
        const Rational& t = y[d];
        if (t == 0) return Decision{base(y.head(d)), "t=0"};
        if (t < 0) return Decision{0, "t<0"};
        return Decision{1, "t>0"};
    };
    auto radius = [base, d](const RationalPoint& c) -> std::optional<Rational> {
        if (c[d] != 0) return std::nullopt;
        return base.violation_radius(c.head(d));
    };
    auto rule = make_rule("plus0(" + base.name() + ")", d + 1, base.colors(), decide, radius, {"t=0", "t<0", "t>0"});
    rule.set_special_levels({Rational(0)});
    return rule;
}

ColoringRule plus1_extension(const ColoringRule& base, const RationalPoint& apex) {
    if (base.colors() < 3) throw std::invalid_argument("plus1 extension needs at least 3 colors");
    require_extension_apex(base, apex);
    const std::size_t d = base.dim();
    const Rational v = apex[d];
    const RationalPoint p = apex.head(d);
    const ColoringRule chi1 = halfspace_coloring(zero_point(d));

    // (x, t) -> (x - (t/v) p, t/v) sends the apex to (0, 1) and fixes X x {0}.
    auto decide = [base, chi1, d, v, p](const RationalPoint& y) {
        const Rational t = y[d] / v;
        const RationalPoint x = y.head(d) - t * p;
        if (t == 0) return Decision{base(x), "t=0"};
        if (t == 1) return Decision{chi1(x), "t=1"};
        if (t == 2) return Decision{smallest_unused(2, {base(-x)}), "t=2"};
        if (t > 1) return Decision{0, "1<t!=2"};
        if (t > 0) return Decision{1, "0<t<1"};
        return Decision{2, "t<0"};
    };
    auto radius = [base, apex, d](const RationalPoint& c) -> std::optional<Rational> {
        if (c == apex) return Rational(0);
        if (c[d] != 0) return std::nullopt;
        return base.violation_radius(c.head(d));
    };
    auto rule = make_rule("plus1(" + base.name() + ")", d + 1, base.colors(), decide, radius,
                          {"t=0", "t=1", "t=2", "1<t!=2", "0<t<1", "t<0"});
    rule.set_special_levels({Rational(0), v, 2 * v});
    return rule;
}

std::string to_string(Plus2Case c) {
    switch (c) {
        case Plus2Case::equal_heights: return "v=w";
        case Plus2Case::one_two: return "v=1,w=2";
        case Plus2Case::two_three: return "v=2,w=3";
        case Plus2Case::generic: return "generic";
    }
    return "unknown";
}

namespace {

struct Plus2Frame {
    Plus2Case kind;
    std::size_t d;
    RationalPoint a, b;  // normalized apex heads
    Rational v, w;       // normalized heights
    Rational scale;      // t' = scale * t
    RationalPoint shear; // x' = x - t' * shear

    [[nodiscard]] std::pair<RationalPoint, Rational> normalize(const RationalPoint& y) const {
        const Rational t = scale * y[d];
        return {y.head(d) - t * shear, t};
    }
};

Plus2Frame plus2_frame(std::size_t d, RationalPoint first, RationalPoint second) {
    if (first.dim() != d + 1 || second.dim() != d + 1) throw std::invalid_argument("apexes must live in X x R");
    if (first == second) throw std::invalid_argument("plus2 extension needs two distinct apexes");
    if (first[d] <= 0 || second[d] <= 0) throw std::invalid_argument("apexes must have positive last coordinates");
    if (first[d] > second[d]) std::swap(first, second);

    Plus2Frame f{Plus2Case::generic, d, first.head(d), second.head(d), first[d], second[d], 1, zero_point(d)};
    if (f.v == f.w) {
        f.kind = Plus2Case::equal_heights;
        f.scale = 1 / f.v;
        f.v = f.w = 1;
        return f;
    }
    f.scale = 1 / (f.w - f.v);
    f.v *= f.scale;
    f.w *= f.scale;
    if (f.v == 1) {
        f.kind = Plus2Case::one_two;
        // shear so that b lands on the neutral element
        f.shear = (1 / f.w) * f.b;
        f.a = f.a - f.v * f.shear;
        f.b = zero_point(d);
    } else if (f.v == 2) {
        f.kind = Plus2Case::two_three;
    }
    return f;
}

}  // namespace

Plus2Case classify_plus2(const RationalPoint& first, const RationalPoint& second) {
    if (first.dim() == 0) throw std::invalid_argument("apex dimension must be positive");
    return plus2_frame(first.dim() - 1, first, second).kind;
}

ColoringRule plus2_extension(const ColoringRule& base, const RationalPoint& first, const RationalPoint& second) {
    if (base.colors() < 4) throw std::invalid_argument("plus2 extension needs at least 4 colors");
    const std::size_t d = base.dim();
    const Plus2Frame f = plus2_frame(d, first, second);
    const ColoringRule& chi0 = base;
    const RationalPoint a = f.a;
    const RationalPoint b = f.b;
    const Rational v = f.v;
    const Rational w = f.w;

    std::function<Decision(const RationalPoint&, const Rational&)> decide;
    std::vector<std::string> labels;
    auto psi_decision = [v, w](const Rational& t) { return Decision{psi(t, v, w), psi_label(t, v, w)}; };

    switch (f.kind) {
        case Plus2Case::equal_heights: {
            const ColoringRule chi1 = pair_coloring(a, b);
            decide = [=](const RationalPoint& x, const Rational& t) {
                if (t == 0) return Decision{chi0(x), "chi_0"};
                if (t == 1) return Decision{chi1(x), "chi_1"};
                if (t == 2) {
                    return Decision{smallest_unused(3, {chi0(x.reflect_through(a)), chi0(x.reflect_through(b))}),
                                    "chi_2"};
                }
                return psi_decision(t);
            };
            // with v = w the band v < t <= w is empty
            labels = {"chi_0", "chi_1", "chi_2", "psi:t<=0", "psi:0<t<=v", "psi:w<t"};
            break;
        }
        case Plus2Case::one_two: {
            const ColoringRule chi1 = halfspace_coloring(a);
            const ColoringRule phi = halfspace_coloring(zero_point(d));
            auto chi2 = [=](const RationalPoint& x) -> Decision {
                const int px = phi(x);
                const int pm = phi(-x);
                const int c_minus = chi0(x.reflect_through(a));  // a x^{-1} a
                const int c_plus = chi0(x + 2 * a);               // a x a
                if (px == pm) return {smallest_unused(3, {c_plus, c_minus}), "chi_2/1"};
                if (c_minus != px && pm != c_plus) return {px, "chi_2/2"};
                if (c_minus == px && pm != c_plus) return {smallest_unused(3, {pm, c_minus}), "chi_2/3"};
                if (c_minus != px && pm == c_plus) return {px, "chi_2/4"};
                return {pm, "chi_2/5"};
            };
            decide = [=](const RationalPoint& x, const Rational& t) {
                if (t == 0) return Decision{chi0(x), "chi_0"};
                if (t == 1) return Decision{chi1(x), "chi_1"};
                if (t == 2) return chi2(x);
                if (t == 3) return Decision{1 - chi1(-x), "chi_3"};
                if (t == 4) return Decision{smallest_unused(2, {chi0(-x)}), "chi_4"};
                return psi_decision(t);
            };
            labels = {"chi_0",   "chi_1", "chi_2/1",  "chi_2/2",    "chi_2/3",    "chi_2/4",
                      "chi_2/5", "chi_3", "chi_4",    "psi:t<=0",   "psi:0<t<=v", "psi:v<t<=w",
                      "psi:w<t"};
            break;
        }
        case Plus2Case::two_three: {
            const ColoringRule chi2 = halfspace_coloring(a);
            const ColoringRule chi3 = halfspace_coloring(b);
            decide = [=](const RationalPoint& x, const Rational& t) {
                if (t == 0) return Decision{chi0(x), "chi_0"};
                if (t == 1) return Decision{1 - chi3(x.reflect_through(a)), "chi_1"};
                if (t == 2) return Decision{chi2(x), "chi_2"};
                if (t == 3) return Decision{chi3(x), "chi_3"};
                if (t == 4) {
                    return Decision{smallest_unused(3, {chi0(x.reflect_through(a)), chi2(x.reflect_through(b))}),
                                    "chi_4"};
                }
                if (t == 6) return Decision{smallest_unused(2, {chi0(x.reflect_through(b))}), "chi_6"};
                return psi_decision(t);
            };
            labels = {"chi_0", "chi_1", "chi_2", "chi_3", "chi_4", "chi_6",
                      "psi:t<=0", "psi:0<t<=v", "psi:v<t<=w", "psi:w<t"};
            break;
        }
        case Plus2Case::generic: {
            const ColoringRule chi_v = halfspace_coloring(a);
            const ColoringRule chi_w = halfspace_coloring(b);
            const int psi2 = psi(2, v, w);
            decide = [=](const RationalPoint& x, const Rational& t) {
                if (t == 0) return Decision{chi0(x), "chi_0"};
                if (t == v) return Decision{chi_v(x), "chi_v"};
                if (t == w) return Decision{1 + chi_w(x), "chi_w"};
                if (t == 2 * v) return Decision{smallest_unused(3, {chi0(x.reflect_through(a)), psi2}), "chi_2v"};
                if (t == 2 * w) return Decision{smallest_unused(2, {chi0(x.reflect_through(b))}), "chi_2w"};
                return psi_decision(t);
            };
            labels = {"chi_0", "chi_v", "chi_w", "chi_2v", "chi_2w",
                      "psi:t<=0", "psi:0<t<=v", "psi:v<t<=w", "psi:w<t"};
            break;
        }
    }

    auto full = [f, decide](const RationalPoint& y) {
        const auto [x, t] = f.normalize(y);
        return decide(x, t);
    };
    const Rational apex_reach = f.kind == Plus2Case::equal_heights ? (b - a).linf_norm() : Rational(0);
    auto radius = [base, first, second, d, apex_reach](const RationalPoint& c) -> std::optional<Rational> {
        if (c == first || c == second) return apex_reach;
        if (c[d] != 0) return std::nullopt;
        return base.violation_radius(c.head(d));
    };
    std::vector<Rational> levels;
    switch (f.kind) {
        case Plus2Case::equal_heights: levels = {0, 1, 2}; break;
        case Plus2Case::one_two: levels = {0, 1, 2, 3, 4}; break;
        case Plus2Case::two_three: levels = {0, 1, 2, 3, 4, 6}; break;
        case Plus2Case::generic: levels = {0, v, w, 2 * v, 2 * w}; break;
    }
    for (auto& t : levels) t /= f.scale;
    auto rule = make_rule("plus2[" + to_string(f.kind) + "](" + base.name() + ")", d + 1, base.colors(), full,
                          radius, labels);
    rule.set_special_levels(std::move(levels));
    return rule;
}

ColoringRule widen_palette(const ColoringRule& rule, int colors) {
    if (colors < rule.colors()) throw std::invalid_argument("cannot shrink a palette");
    ColoringRule wide(
        rule.name(), rule.dim(), colors, [rule](const RationalPoint& x) { return rule(x); },
        [rule](const RationalPoint& x) { return rule.branch(x); },
        [rule](const RationalPoint& c) { return rule.violation_radius(c); }, rule.branch_labels());
    wide.set_special_levels(rule.special_levels());
    return wide;
}

ColoringRule constant_coloring(std::size_t dim, int colors, int value) {
    if (value < 0 || value >= colors) throw std::invalid_argument("constant color out of range");
    auto decide = [value](const RationalPoint&) { return Decision{value, "constant"}; };
    return make_rule("constant", dim, colors, decide, {}, {"constant"});
}

ScanReport symmetric_pair_scan(const ColoringRule& rule, const std::vector<RationalPoint>& centers,
                               const ScanOptions& options) {
    if (options.samples < 1) throw std::invalid_argument("scan needs at least one sample");
    if (options.inner_radius < 0) throw std::invalid_argument("inner radius must be nonnegative");
    if (Rational(options.span) <= options.inner_radius) throw std::invalid_argument("span must exceed inner radius");
    const std::size_t d = rule.dim();
    for (const auto& c : centers) {
        if (c.dim() != d) throw std::invalid_argument("center dimension does not match the coloring");
    }

    ScanReport report;
    report.rule = rule.name();
    report.centers = centers;
    report.inner_radius = options.inner_radius;
    report.samples = options.samples;
    report.seed = options.seed;

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> den_dist(1, 4);
    std::bernoulli_distribution use_hint(0.5);

    auto draw = [&](const RationalPoint& c) {
        while (true) {
            RationalPoint x(d);
            for (std::size_t i = 0; i < d; ++i) {
                const long den = den_dist(rng);
                std::uniform_int_distribution<long> num(-options.span * den, options.span * den);
                x[i] = make_rational(num(rng), den);
                x[i] += c[i];
            }
            if (!options.hint_levels.empty() && use_hint(rng)) {
                std::uniform_int_distribution<std::size_t> pick(0, options.hint_levels.size() - 1);
                x[d - 1] = options.hint_levels[pick(rng)];
            }
            if ((x - c).linf_norm() > options.inner_radius) return x;
        }
    };

    for (std::size_t ci = 0; ci < centers.size(); ++ci) {
        const RationalPoint& c = centers[ci];
        const auto documented = rule.violation_radius(c);
        for (std::size_t s = 0; s < options.samples; ++s) {
            RationalPoint x = draw(c);
            RationalPoint mirror = x.reflect_through(c);
            ++report.checked;
            const int cx = rule(x);
            if (cx != rule(mirror)) continue;
            ++report.violation_count;
            const bool explained = documented && (x - c).linf_norm() <= *documented;
            if (!explained) ++report.unexplained_count;
            if (report.violations.size() < options.max_recorded) {
                report.violations.push_back({std::move(x), std::move(mirror), ci, cx, explained});
            }
        }
    }
    return report;
}

}  // namespace centerpole
