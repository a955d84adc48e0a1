#pragma once

/**
 * @file conjecture.hpp
 * @brief Classification of monomial ideals against the torsion-freeness
 *        question for I (x) dual(I), plus exhaustive search drivers.
 *
 * A normalized ideal I (offset 0, so R <= I <= V) is classified by the
 * generator counts of I, dual(I) and K_R, by whether I * dual(I) recovers
 * the canonical ideal, and by the torsion of I (x) dual(I). A counterexample
 * is a torsionfree ideal that is neither principal nor a shift of K_R.
 * Search enumerates every H-closed exponent set between R and V (the
 * up-closed subsets of the gap poset) and classifies each one.
 */

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "nsring/torsion.hpp"

namespace nsring {

struct IdealClassification {
    MonomialIdeal ideal; // normalized
    Int mu_ideal = 0;
    Int mu_dual = 0;
    Int mu_canonical = 0;
    bool is_principal = false;       // I isomorphic to R  (mu = 1)
    bool is_canonical_class = false; // I isomorphic to K_R (mu of the dual = 1)
    bool canonical_map_iso = false;  // I * dual(I) = K_R and mu * mu_dual = mu(K_R)
    bool two_generated_pairing = false; // the above with mu = mu_dual = 2, mu(K_R) = 4
    Int torsion = 0;                 // length of the torsion of I (x) dual(I)
    bool torsionfree = false;
    bool is_counterexample = false;  // torsionfree but in neither trivial class
    bool gorenstein = false;         // mu(K_R) = 1
    bool r_dual_torsionfree = false; // torsion of I (x) (R : I) vanishes; Gorenstein case only
    bool is_counterexample_principal_variant = false;
    std::vector<Int> end_ring_generators{}; // minimal generators of the semigroup of I : I
};

IdealClassification classify(const MonomialIdeal& I);
IdealClassification classify(const MonomialIdeal& I, const MonomialIdeal& canonical_ideal);

/// Evidence for the two-generated pairing condition:
/// mu(I) = mu(dual I) = 2, I * dual(I) = K_R and mu(K_R) = 4.
struct PairingEvidence {
    bool holds = false;
    Int mu_ideal = 0;
    Int mu_dual = 0;
    Int mu_canonical = 0;
    bool product_is_canonical = false;
};

PairingEvidence two_generated_pairing(const MonomialIdeal& I);

/// The residue-maxima triple attached to a pairing pair I = (1, t^c1),
/// dual = (1, t^c2): b1 = a - c1, b2 = a - c2, b3 = a - c1 - c2, with the six
/// membership facts that hold for every such pair:
///   [0] a not in H            [1] 2 b1 - a in H       [2] 2 b2 - a in H
///   [3] b2 + b3 - a in H      [4] b1 + b3 - a in H    [5] 2 b2 - b3 in H
/// Throws ConditionNotSatisfied unless the pairing condition holds.
struct DualPairProfile {
    Int c1 = 0;
    Int c2 = 0;
    Int a = 0;
    Int b1 = 0;
    Int b2 = 0;
    Int b3 = 0;
    std::array<bool, 6> memberships{};
};

DualPairProfile dual_pair_profile(const MonomialIdeal& I);

/// Multiplicity is at least 8 whenever the pairing condition holds.
/// Throws ConditionNotSatisfied unless it does.
bool pairing_multiplicity_check(const MonomialIdeal& I);

/// e(R) > (mu(I) + 1) * mu(dual I) whenever the evaluation map is an
/// isomorphism and both generator counts are at least 2.
/// Throws PreconditionNotMet otherwise.
bool iso_multiplicity_inequality(const MonomialIdeal& I);

/// Classification of I over its endomorphism ring B = I : I.
IdealClassification change_of_rings(const MonomialIdeal& I);

/// All up-closed subsets of the gap poset (g <= g' iff g' - g in H), each as
/// an ascending gap list; sorted lexicographically. Each subset U yields the
/// ideal with exponent set H union U. Throws EnumerationBudgetExceeded when
/// more than `cap` subsets exist.
std::vector<std::vector<Int>> enumerate_gap_filters(const NumericalSemigroup& H,
                                                    std::uint64_t cap);

/// The normalized ideals R <= I <= V, in the deterministic search order
/// (fewest added gap exponents first, then lexicographic).
std::vector<MonomialIdeal> enumerate_ideals(const SemigroupPtr& H, std::uint64_t cap);

struct ClassifiedIdeal {
    std::vector<Int> gap_exponents; // gaps of H adjoined to R to form the ideal
    IdealClassification cls;
};

struct SearchReport {
    SemigroupPtr semigroup;
    std::uint64_t total = 0;
    std::uint64_t principal_count = 0;
    std::uint64_t canonical_count = 0;
    std::uint64_t torsion_positive_count = 0;
    std::uint64_t counterexample_count = 0;
    bool gorenstein = false;
    std::vector<ClassifiedIdeal> counterexamples;
    std::vector<ClassifiedIdeal> pairing_hits; // two-generated pairing condition holds
};

/// Classifies every ideal of the enumeration. The optional sink sees each
/// classification in the deterministic order (useful for CSV streaming).
SearchReport search(const SemigroupPtr& H, std::uint64_t cap,
                    const std::function<void(const ClassifiedIdeal&)>& sink = nullptr);

/// Walks every numerical semigroup with genus <= genus_max and multiplicity
/// <= mult_max, by removing one minimal generator beyond the Frobenius number
/// at a time. Deterministic order; the callback returns false to prune the
/// subtree below a semigroup.
void for_each_numerical_semigroup(Int genus_max, Int mult_max,
                                  const std::function<bool(const NumericalSemigroup&)>& visit);

} // namespace nsring
