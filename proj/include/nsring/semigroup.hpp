#pragma once

/**
 * @file semigroup.hpp
 * @brief Numerical semigroups: additive submonoids of N with finite complement.
 *
 * A semigroup is stored together with its elementary invariants (minimal
 * generators, Frobenius number, conductor, gaps) and a dense membership
 * table, so that all downstream exponent-set arithmetic runs on exact data.
 * Values are immutable after construction and safe to share across threads.
 */

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nsring/errors.hpp"

namespace nsring {

using Int = std::int64_t;

/// Parses a comma-separated integer list such as "8,11,14,15" or "-3,0,2".
std::vector<Int> parse_int_list(std::string_view text);

class NumericalSemigroup {
public:
    /// Builds the semigroup generated by `generators` (positive, gcd 1).
    /// The input need not be minimal; the stored list is always the unique
    /// minimal generating set.
    explicit NumericalSemigroup(std::vector<Int> generators);

    /// Parses a comma-separated generator list such as "8,11,14,15".
    static NumericalSemigroup parse(std::string_view text);

    /// n is a nonnegative integer combination of the generators.
    bool contains(Int n) const {
        if (n < 0) return false;
        if (n >= conductor_) return true;
        return member_[static_cast<std::size_t>(n)];
    }

    /// Minimal generating set, strictly increasing.
    const std::vector<Int>& generators() const { return gens_; }

    /// Multiplicity e = least positive member.
    Int multiplicity() const { return gens_.front(); }

    /// Embedding dimension v = number of minimal generators.
    Int embedding_dimension() const { return static_cast<Int>(gens_.size()); }

    /// Largest integer not in the semigroup (-1 when the semigroup is all of N).
    Int frobenius() const { return frobenius_; }

    /// conductor = frobenius + 1; every n >= conductor is a member.
    Int conductor() const { return conductor_; }

    /// Positive non-members, ascending.
    const std::vector<Int>& gaps() const { return gaps_; }

    Int genus() const { return static_cast<Int>(gaps_.size()); }

    /// Apery set with respect to a nonzero member n: the least member of each
    /// residue class mod n. Sorted ascending; always has exactly n elements.
    std::vector<Int> apery_set(Int n) const;

    bool operator==(const NumericalSemigroup& other) const { return gens_ == other.gens_; }
    bool operator!=(const NumericalSemigroup& other) const { return !(*this == other); }

private:
    std::vector<Int> gens_;
    Int frobenius_ = -1;
    Int conductor_ = 0;
    std::vector<Int> gaps_;
    std::vector<bool> member_; // membership for [0, max(conductor, 2*max_gen) + 1)
};

/// Residue-class maxima of the gaps: alpha_i = max { n not in H : n == i mod e }
/// for 1 <= i <= e-1, together with S = { alpha_i }, b = min S and a = max S.
/// max S always equals the Frobenius number.
struct SSet {
    std::map<Int, Int> alphas;
    std::set<Int> values;
    Int b = 0;
    Int a = 0;
};

/// Throws MultiplicityOne when the semigroup is all of N (no gaps).
SSet alpha_profile(const NumericalSemigroup& H);

struct RingInvariants {
    Int multiplicity;        // e
    Int embedding_dimension; // v
    bool v_equals_e;
};

RingInvariants ring_invariants(const NumericalSemigroup& H);

/// True iff n + g lies in H for every generator g, i.e. t^n multiplies the
/// maximal ideal of the semigroup ring into the ring.
bool multiplies_maximal_ideal_into_ring(const NumericalSemigroup& H, Int n);

} // namespace nsring
