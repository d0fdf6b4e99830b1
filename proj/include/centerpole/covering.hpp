#pragma once

// Covering Sigma_0-sets by lattice shifts of a sandwich: a constructive
// case table, an exhaustive box search used as an independent oracle, and a
// harness that runs both over every maximal Sigma_0-set.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "centerpole/cube.hpp"
#include "centerpole/lattice.hpp"

namespace centerpole {

/// Raised when the case table has no branch for a Sigma_0-set. Never expected
/// for valid inputs; surfacing it means the table is wrong.
class InvalidCoverCase : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct CoverCertificate {
    SigmaZeroSet tau;
    int k;
    std::int64_t s;
    LatticePoint shift;
    std::string case_label;
};

/// Checks tau + (-shift) against an explicit sandwich point set.
[[nodiscard]] bool verify_certificate(const CoverCertificate& cert, const Sandwich& sandwich);
[[nodiscard]] bool verify_certificate(const CoverCertificate& cert);

/// Shift prescribed by the case analysis for covering tau by shift + Xi^k_s.
/// Requires s <= k - 2.
CoverCertificate constructive_cover_shift(const SigmaZeroSet& tau, std::int64_t s);

/// Every shift x in {-box..box}^{1+k} with tau contained in x + Xi^k_s, in
/// lexicographic order.
std::vector<LatticePoint> brute_force_cover_shifts(const std::vector<LatticePoint>& tau, int k, std::int64_t s,
                                                   int box = 1);
std::vector<LatticePoint> brute_force_cover_shifts(const std::vector<LatticePoint>& tau, const Sandwich& sandwich,
                                                   int box = 1);

struct CoverFailure {
    Facet facet;
    std::int64_t anchor;
    LShape shape;
    std::string reason;
};

struct CoverReport {
    int k = 0;
    std::int64_t s = 0;
    std::size_t total = 0;
    std::vector<CoverFailure> failures;
};

/// Runs the constructive table and the box-1 oracle over all maximal
/// Sigma_0-sets of {0,1}^{k+1}. Throws std::domain_error when s > k - 2.
CoverReport verify_covering_lemma(int k, std::int64_t s);

/// For any s: lists the maximal Sigma_0-sets with no cover inside the box.
/// Makes no claim; intended for probing s > k - 2.
CoverReport explore_covering(int k, std::int64_t s, int box = 1);

}  // namespace centerpole
