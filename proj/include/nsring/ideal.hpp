#pragma once

/**
 * @file ideal.hpp
 * @brief Monomial fractional ideals of a numerical semigroup ring.
 *
 * An ideal is the set E of exponents n with t^n in the ideal: an H-closed
 * set of integers that is bounded below and contains a full tail [t, oo).
 * The representation is canonical:
 *
 *   - offset     = min E,
 *   - tail_start = least t such that t, t+1, ..., t+e-1 all lie in E
 *                  (e consecutive members force the whole tail, since e is
 *                  a member of H), and
 *   - window     = membership bits for [offset, tail_start).
 *
 * Equality of ideals is therefore a plain bit comparison. All operations
 * are pure; values are immutable and freely shareable.
 */

#include <memory>
#include <vector>

#include "nsring/semigroup.hpp"

namespace nsring {

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

class MonomialIdeal {
public:
    /// Ideal generated by t^n for n in exps. Absorbed generators are dropped;
    /// the stored minimal generators are the unique minimal system.
    static MonomialIdeal from_generators(SemigroupPtr H, std::vector<Int> exps);
    static MonomialIdeal from_generators(const NumericalSemigroup& H, std::vector<Int> exps);

    /// The ring itself as the ideal (t^0).
    static MonomialIdeal ring(SemigroupPtr H);

    /// Canonical ideal: exponents m with a - m not in H, where a is the
    /// Frobenius number. Offset is always 0.
    static MonomialIdeal canonical(SemigroupPtr H);

    /// Builds an ideal from raw membership bits for [lo, lo + bits.size()).
    /// Precondition: the described set (together with the implicit tail
    /// [lo + bits.size(), oo)) is H-closed.
    static MonomialIdeal from_window(SemigroupPtr H, Int lo, std::vector<bool> bits);

    const NumericalSemigroup& semigroup() const { return *H_; }
    const SemigroupPtr& semigroup_ptr() const { return H_; }

    Int offset() const { return offset_; }
    Int tail_start() const { return tail_start_; }

    bool contains(Int n) const {
        if (n < offset_) return false;
        if (n >= tail_start_) return true;
        return window_[static_cast<std::size_t>(n - offset_)];
    }

    const std::vector<Int>& minimal_generators() const { return min_gens_; }
    Int mu() const { return static_cast<Int>(min_gens_.size()); }

    /// Translate every exponent by q.
    MonomialIdeal shifted(Int q) const;

    /// Shift so that the offset becomes 0.
    MonomialIdeal normalized() const { return shifted(-offset_); }

    /// Same exponent set viewed over another semigroup. Precondition: the
    /// exponent set is closed under addition of members of `H`, as is the
    /// case for the outputs of end_ring.
    MonomialIdeal reinterpreted_over(SemigroupPtr H) const;

    bool operator==(const MonomialIdeal& other) const {
        return *H_ == *other.H_ && offset_ == other.offset_ &&
               tail_start_ == other.tail_start_ && window_ == other.window_;
    }
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

private:
    MonomialIdeal(SemigroupPtr H, Int lo, std::vector<bool> bits);

    SemigroupPtr H_;
    Int offset_ = 0;
    Int tail_start_ = 0;
    std::vector<bool> window_; // membership for [offset_, tail_start_)
    std::vector<Int> min_gens_;
};

/// Colon ideal J : I = { n : n + g in E_J for every minimal generator g of I }.
MonomialIdeal colon(const MonomialIdeal& J, const MonomialIdeal& I);

/// Product ideal: the Minkowski sum of the exponent sets.
MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);

/// Canonical dual K_R : I. Applying it twice returns I.
MonomialIdeal dual(const MonomialIdeal& I);

/// E_inner is contained in E_outer.
bool contains_ideal(const MonomialIdeal& outer, const MonomialIdeal& inner);

/// Number of exponents in E \ F. Throws NotContained unless F is a subset of E.
Int length_quotient(const MonomialIdeal& E, const MonomialIdeal& F);

/// The exponents counted by length_quotient, ascending.
std::vector<Int> quotient_exponents(const MonomialIdeal& E, const MonomialIdeal& F);

/// Endomorphism ring B = I : I, returned as a numerical semigroup together
/// with B as an ideal over the base ring, and I and K_B viewed over B.
struct EndomorphismRing {
    SemigroupPtr ring;              // H_B
    MonomialIdeal over_base;        // B as a fractional ideal over H
    MonomialIdeal ideal_over_b;     // I with its B-module structure
    MonomialIdeal canonical_over_b; // K_B = K_R : B, viewed over H_B
};

EndomorphismRing end_ring(const MonomialIdeal& I);

} // namespace nsring
