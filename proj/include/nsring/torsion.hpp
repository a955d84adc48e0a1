#pragma once

/**
 * @file torsion.hpp
 * @brief Length of the torsion submodule of I (x) J for monomial ideals.
 *
 * Two independent routes are provided. For two-generated I = (1, t^c) the
 * torsion module is the colon quotient (J : I) / (R : I)J and its length is
 * a plain exponent count. For arbitrary monomial I the length is computed
 * degree by degree from a binomial presentation: in each degree the torsion
 * contribution is (number of connected components of the syzygy graph) - 1.
 * The two routes agree on their common domain and are tested against each
 * other.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "nsring/ideal.hpp"

namespace nsring {

/// One binomial relation t^(d-c_i) e_i - t^(d-c_j) e_j between minimal
/// generators c_i, c_j of an ideal; d is a minimal generator of the
/// exponent-set intersection (c_i + H) and (c_j + H).
struct SyzygyGenerator {
    std::size_t i = 0;
    std::size_t j = 0;
    Int degree = 0;
};

/// All binomial relations between pairs of minimal generators. These generate
/// the full syzygy module of the presentation sending e_i to t^(c_i).
std::vector<SyzygyGenerator> syzygy_generators(const MonomialIdeal& I);

struct TorsionReport {
    Int total_length = 0;
    std::vector<std::pair<Int, Int>> per_degree; // (degree, contribution), positive entries only
    bool torsionfree = true;
    std::vector<Int> witness_degrees;
};

/// Length of the torsion of I (x) J by the graded algorithm, valid for any
/// monomial I. Degrees are scanned up to D* = max syzygy degree + tail(J),
/// beyond which every contribution provably vanishes; `extra_degrees` widens
/// the scan (the result must not change, which the tests exercise).
TorsionReport torsion_length(const MonomialIdeal& I, const MonomialIdeal& J,
                             Int extra_degrees = 0);

/// Colon-quotient route, only for mu(I) = 2 after normalization. Witnesses
/// are the exponents of (J : I) missing from (R : I)J.
TorsionReport torsion_two_generated(const MonomialIdeal& I, const MonomialIdeal& J);

/// Torsion of I (x) dual(I): the predicate that drives the classification.
TorsionReport torsion_self(const MonomialIdeal& I);

/// Length of (R : I^2) / (R : I)^2 for two-generated I. Equals the torsion
/// of I (x) (R : I); the squared-colon form is the orientation in which the
/// quotient is well defined, since (R : I)^2 always sits inside R : I^2.
TorsionReport colon_square_torsion(const MonomialIdeal& I);

} // namespace nsring
