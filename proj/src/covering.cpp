#include "centerpole/covering.hpp"

#include <algorithm>
#include <sstream>

namespace centerpole {

namespace {

std::vector<LatticePoint> as_lattice(const SigmaZeroSet& tau) {
    std::vector<LatticePoint> out;
    out.reserve(tau.points().size());
    for (const auto& p : tau.points()) out.push_back(p.to_lattice());
    return out;
}

std::string describe(const LatticePoint& p) {
    std::ostringstream os;
    os << p;
    return os.str();
}

bool shift_is_in_case_family(const LatticePoint& shift, std::size_t gamma) {
    for (std::size_t i = 0; i < shift.dim(); ++i) {
        if (shift[i] < -1 || shift[i] > 1) return false;
        if (shift[i] != 0 && i != 0 && i != gamma) return false;
    }
    return true;
}

}  // namespace

bool verify_certificate(const CoverCertificate& cert, const Sandwich& sandwich) {
    if (sandwich.k() != cert.k || sandwich.s() != cert.s) return false;
    for (const auto& p : cert.tau.points()) {
        if (!sandwich.contains(p.to_lattice() - cert.shift)) return false;
    }
    return true;
}

bool verify_certificate(const CoverCertificate& cert) {
    return verify_certificate(cert, build_sandwich(cert.k, cert.s));
}

CoverCertificate constructive_cover_shift(const SigmaZeroSet& tau, std::int64_t s) {
    const int k = tau.k();
    if (s > k - 2) throw std::invalid_argument("covering needs s <= k - 2");
    const std::size_t dim = static_cast<std::size_t>(k) + 1;

    bool has_bottom = false;  // tau_0: points with x_0 = 0
    bool has_top = false;     // tau_1: points with x_0 = 1
    for (const auto& p : tau.points()) (p[0] == 0 ? has_bottom : has_top) = true;

    std::size_t gamma = tau.facet().axis;
    int l = tau.facet().level;
    // With tau_0 or tau_1 empty, tau also lies in a facet orthogonal to e_0.
    if (gamma != 0 && (!has_bottom || !has_top)) {
        gamma = 0;
        l = has_top ? 1 : 0;
    }

    const std::int64_t a = tau.anchor();
    const LatticePoint zero(dim);
    const LatticePoint e0 = LatticePoint::unit(dim, 0);

    auto make = [&](LatticePoint shift, std::string label) {
        return CoverCertificate{tau, k, s, std::move(shift), std::move(label)};
    };

    if (gamma == 0) {
        if (l == 0) return a < k - 1 ? make(zero, "0.1") : make(-e0, "0.2");
        return a < k - 1 ? make(e0, "0.3") : make(zero, "0.4");
    }

    const LatticePoint eg = LatticePoint::unit(dim, gamma);
    if (tau.shape() == LShape::lower_l) {
        if (l == 0) {
            if (a > s) return make(zero, "I.1.0/a>s");
            if (a == s) return make(-eg, "I.1.0/a=s");
            return make(e0, "I.1.0/a<s");
        }
        if (a > s) return make(zero, "I.1.1/a>s");
        if (a < s) return make(e0, "I.1.1/a<s");
        return make(eg + e0, "I.1.1/a=s");
    }

    if (l == 0) {
        if (a >= s) return make(zero, "I.2.0/a>=s");
        if (a == s - 1) return make(-eg, "I.2.0/a=s-1");
        return make(e0, "I.2.0/a<s-1");
    }
    if (a == k - 1) return make(eg, "I.2.1/a=k-1");
    if (s <= a && a < k - 1) return make(zero, "I.2.1/s<=a<k-1");
    if (a == s - 1) return make(eg + e0, "I.2.1/a=s-1");
    if (a < s - 1) return make(e0, "I.2.1/a<s-1");
    throw InvalidCoverCase("no covering case applies to anchor " + std::to_string(a));
}

std::vector<LatticePoint> brute_force_cover_shifts(const std::vector<LatticePoint>& tau, const Sandwich& sandwich,
                                                   int box) {
    if (box < 1) throw std::invalid_argument("box must be at least 1");
    const std::size_t dim = sandwich.ambient_dim();
    for (const auto& p : tau) {
        if (p.dim() != dim) throw std::invalid_argument("tau point dimension does not match the sandwich");
    }

    std::vector<LatticePoint> out;
    LatticePoint shift(dim);
    for (std::size_t i = 0; i < dim; ++i) shift[i] = -box;
    while (true) {
        const bool covers = std::all_of(tau.begin(), tau.end(),
                                        [&](const LatticePoint& p) { return sandwich.contains(p - shift); });
        if (covers) out.push_back(shift);
        // odometer, last coordinate fastest -> lexicographic order
        std::size_t i = dim;
        while (i > 0 && shift[i - 1] == box) {
            shift[i - 1] = -box;
            --i;
        }
        if (i == 0) break;
        ++shift[i - 1];
    }
    return out;
}

std::vector<LatticePoint> brute_force_cover_shifts(const std::vector<LatticePoint>& tau, int k, std::int64_t s,
                                                   int box) {
    return brute_force_cover_shifts(tau, build_sandwich(k, s), box);
}

CoverReport verify_covering_lemma(int k, std::int64_t s) {
    if (s > k - 2) {
        throw std::domain_error("the covering property is only claimed for s <= k - 2; use explore_covering");
    }
    const Sandwich sandwich = build_sandwich(k, s);
    const auto sets = enumerate_maximal_sigma0_sets(k);

    CoverReport report{k, s, sets.size(), {}};
    for (const auto& tau : sets) {
        auto fail = [&](std::string reason) {
            report.failures.push_back({tau.facet(), tau.anchor(), tau.shape(), std::move(reason)});
        };
        CoverCertificate cert = [&]() -> CoverCertificate {
            try {
                return constructive_cover_shift(tau, s);
            } catch (const InvalidCoverCase& e) {
                return CoverCertificate{tau, k, s, LatticePoint(), std::string("no case: ") + e.what()};
            }
        }();
        if (cert.shift.dim() == 0) {
            fail(cert.case_label);
            continue;
        }
        if (!verify_certificate(cert, sandwich)) {
            fail("case " + cert.case_label + " prescribes shift " + describe(cert.shift) +
                 " which fails membership verification");
            continue;
        }
        if (!shift_is_in_case_family(cert.shift, tau.facet().axis)) {
            fail("case " + cert.case_label + " shift " + describe(cert.shift) + " outside {0, +-e_0, +-e_g, e_g+e_0}");
            continue;
        }
        const auto oracle = brute_force_cover_shifts(as_lattice(tau), sandwich, 1);
        if (!std::binary_search(oracle.begin(), oracle.end(), cert.shift)) {
            fail("case " + cert.case_label + " shift " + describe(cert.shift) + " missing from the brute-force list");
        }
    }
    return report;
}

CoverReport explore_covering(int k, std::int64_t s, int box) {
    const Sandwich sandwich = build_sandwich(k, s);
    const auto sets = enumerate_maximal_sigma0_sets(k);
    CoverReport report{k, s, sets.size(), {}};
    for (const auto& tau : sets) {
        if (brute_force_cover_shifts(as_lattice(tau), sandwich, box).empty()) {
            report.failures.push_back({tau.facet(), tau.anchor(), tau.shape(),
                                       "no shift within box " + std::to_string(box)});
        }
    }
    return report;
}

}  // namespace centerpole
