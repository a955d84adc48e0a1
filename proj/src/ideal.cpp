#include "nsring/ideal.hpp"

#include <algorithm>

namespace nsring {

namespace {

void require_same_semigroup(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.semigroup() != b.semigroup())
        throw SemigroupMismatch("ideals live over different semigroups");
}

} // namespace

MonomialIdeal::MonomialIdeal(SemigroupPtr H, Int lo, std::vector<bool> bits) : H_(std::move(H)) {
    const Int hi = lo + static_cast<Int>(bits.size());
    const Int e = H_->multiplicity();

    Int first = hi;
    for (Int n = lo; n < hi; ++n) {
        if (bits[static_cast<std::size_t>(n - lo)]) {
            first = n;
            break;
        }
    }
    offset_ = first;

    // Least t >= offset such that t..t+e-1 are all members; positions >= hi
    // are members by the tail guarantee.
    Int t = hi;
    for (Int cand = offset_; cand < hi; ++cand) {
        bool run = true;
        for (Int k = cand; k < std::min(cand + e, hi); ++k) {
            if (!bits[static_cast<std::size_t>(k - lo)]) {
                run = false;
                break;
            }
        }
        if (run) {
            t = cand;
            break;
        }
    }
    tail_start_ = t;

    // An H-closed set is full beyond the first run of e members.
    for (Int n = t; n < hi; ++n)
        if (!bits[static_cast<std::size_t>(n - lo)])
            throw Error("window is not closed under the semigroup action");

    window_.assign(static_cast<std::size_t>(tail_start_ - offset_), false);
    for (Int n = offset_; n < tail_start_; ++n)
        window_[static_cast<std::size_t>(n - offset_)] = bits[static_cast<std::size_t>(n - lo)];

    // Minimal generators: members n with n - g outside E for every minimal
    // generator g of H. Everything >= tail_start + e reduces through e.
    for (Int n = offset_; n < tail_start_ + e; ++n) {
        if (!contains(n)) continue;
        bool reducible = false;
        for (Int g : H_->generators()) {
            if (contains(n - g)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) min_gens_.push_back(n);
    }
}

MonomialIdeal MonomialIdeal::from_window(SemigroupPtr H, Int lo, std::vector<bool> bits) {
    return MonomialIdeal(std::move(H), lo, std::move(bits));
}

MonomialIdeal MonomialIdeal::from_generators(SemigroupPtr H, std::vector<Int> exps) {
    if (exps.empty()) throw EmptyGenerators("ideal generator list is empty");
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());

    const Int lo = exps.front();
    const Int hi = exps.back() + H->conductor(); // n >= max + conductor is always a member
    std::vector<bool> bits(static_cast<std::size_t>(hi - lo), false);
    for (Int n = lo; n < hi; ++n) {
        for (Int g : exps) {
            if (H->contains(n - g)) {
                bits[static_cast<std::size_t>(n - lo)] = true;
                break;
            }
        }
    }
    return MonomialIdeal(std::move(H), lo, std::move(bits));
}

MonomialIdeal MonomialIdeal::from_generators(const NumericalSemigroup& H, std::vector<Int> exps) {
    return from_generators(std::make_shared<const NumericalSemigroup>(H), std::move(exps));
}

MonomialIdeal MonomialIdeal::ring(SemigroupPtr H) { return from_generators(std::move(H), {0}); }

MonomialIdeal MonomialIdeal::canonical(SemigroupPtr H) {
    const Int a = H->frobenius();
    const Int c = H->conductor();
    std::vector<bool> bits(static_cast<std::size_t>(c), false);
    for (Int m = 0; m < c; ++m)
        bits[static_cast<std::size_t>(m)] = !H->contains(a - m);
    return MonomialIdeal(std::move(H), 0, std::move(bits));
}

MonomialIdeal MonomialIdeal::shifted(Int q) const {
    MonomialIdeal result(*this);
    result.offset_ += q;
    result.tail_start_ += q;
    for (Int& g : result.min_gens_) g += q;
    return result;
}

MonomialIdeal MonomialIdeal::reinterpreted_over(SemigroupPtr H) const {
    std::vector<bool> bits(window_);
    return MonomialIdeal(std::move(H), offset_, std::move(bits));
}

MonomialIdeal colon(const MonomialIdeal& J, const MonomialIdeal& I) {
    require_same_semigroup(J, I);
    const auto& gens = I.minimal_generators();
    const Int lo = J.offset() - gens.front();
    const Int hi = std::max(lo, J.tail_start() - gens.front());
    std::vector<bool> bits(static_cast<std::size_t>(hi - lo), false);
    for (Int n = lo; n < hi; ++n) {
        bool in = true;
        for (Int g : gens) {
            if (!J.contains(n + g)) {
                in = false;
                break;
            }
        }
        bits[static_cast<std::size_t>(n - lo)] = in;
    }
    return MonomialIdeal::from_window(J.semigroup_ptr(), lo, std::move(bits));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_semigroup(I, J);
    std::vector<Int> sums;
    sums.reserve(I.minimal_generators().size() * J.minimal_generators().size());
    for (Int a : I.minimal_generators())
        for (Int b : J.minimal_generators()) sums.push_back(a + b);
    return MonomialIdeal::from_generators(I.semigroup_ptr(), std::move(sums));
}

MonomialIdeal dual(const MonomialIdeal& I) {
    return colon(MonomialIdeal::canonical(I.semigroup_ptr()), I);
}

bool contains_ideal(const MonomialIdeal& outer, const MonomialIdeal& inner) {
    require_same_semigroup(outer, inner);
    for (Int g : inner.minimal_generators())
        if (!outer.contains(g)) return false;
    return true;
}

std::vector<Int> quotient_exponents(const MonomialIdeal& E, const MonomialIdeal& F) {
    if (!contains_ideal(E, F))
        throw NotContained("quotient requires the second ideal to sit inside the first");
    std::vector<Int> exps;
    const Int hi = std::max(E.tail_start(), F.tail_start());
    for (Int n = E.offset(); n < hi; ++n)
        if (E.contains(n) && !F.contains(n)) exps.push_back(n);
    return exps;
}

Int length_quotient(const MonomialIdeal& E, const MonomialIdeal& F) {
    return static_cast<Int>(quotient_exponents(E, F).size());
}

EndomorphismRing end_ring(const MonomialIdeal& I) {
    MonomialIdeal b = colon(I, I); // offset 0: the exponent set is a semigroup containing H

    Int least = 1;
    while (!b.contains(least)) ++least;
    std::vector<Int> gens;
    for (Int n = 1; n < b.tail_start() + least; ++n)
        if (b.contains(n)) gens.push_back(n);
    if (gens.empty()) gens.push_back(1); // B is all of N

    auto HB = std::make_shared<const NumericalSemigroup>(std::move(gens));
    MonomialIdeal kb = colon(MonomialIdeal::canonical(I.semigroup_ptr()), b);
    return EndomorphismRing{HB, b, I.reinterpreted_over(HB), kb.reinterpreted_over(HB)};
}

} // namespace nsring
