#include "nsring/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace nsring {

namespace {

// Membership sieve for [0, bound) by dynamic programming over the generators.
std::vector<bool> sieve(const std::vector<Int>& gens, Int bound) {
    std::vector<bool> member(static_cast<std::size_t>(bound), false);
    member[0] = true;
    for (Int n = 1; n < bound; ++n) {
        for (Int g : gens) {
            if (g > n) break;
            if (member[static_cast<std::size_t>(n - g)]) {
                member[static_cast<std::size_t>(n)] = true;
                break;
            }
        }
    }
    return member;
}

} // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<Int> generators) {
    if (generators.empty()) throw EmptyGenerators("generator list is empty");
    for (Int g : generators)
        if (g <= 0) throw Error("generators must be positive, got " + std::to_string(g));

    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    Int g = 0;
    for (Int x : generators) g = std::gcd(g, x);
    if (g != 1) throw GcdNotOne("gcd of generators is " + std::to_string(g));

    const Int e = generators.front();

    // Grow the sieve until a run of e consecutive members appears; from the
    // start of that run on, everything is a member (e itself is a member).
    Int bound = 2 * generators.back() + e + 2;
    for (;;) {
        member_ = sieve(generators, bound);
        Int run = 0;
        Int tail = -1;
        for (Int n = 0; n < bound; ++n) {
            run = member_[static_cast<std::size_t>(n)] ? run + 1 : 0;
            if (run == e) {
                tail = n - e + 1;
                break;
            }
        }
        if (tail >= 0) {
            frobenius_ = -1;
            for (Int n = 1; n < tail; ++n)
                if (!member_[static_cast<std::size_t>(n)]) frobenius_ = n;
            conductor_ = frobenius_ + 1;
            break;
        }
        bound *= 2;
    }

    const Int table_bound = std::max(conductor_, 2 * generators.back()) + 1;
    member_ = sieve(generators, table_bound);

    for (Int n = 1; n <= frobenius_; ++n)
        if (!member_[static_cast<std::size_t>(n)]) gaps_.push_back(n);

    // Minimal generators: positive members that are not a sum of two positive
    // members. Everything >= conductor + e reduces through e.
    for (Int n = 1; n <= conductor_ + e; ++n) {
        if (!contains(n)) continue;
        bool reducible = false;
        for (Int h = e; h <= n - e; ++h) {
            if (contains(h) && contains(n - h)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) gens_.push_back(n);
    }
}

std::vector<Int> parse_int_list(std::string_view text) {
    std::vector<Int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (token.empty()) throw Error("empty entry in list '" + std::string(text) + "'");
        Int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw Error("cannot parse integer '" + std::string(token) + "'");
        values.push_back(value);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return values;
}

NumericalSemigroup NumericalSemigroup::parse(std::string_view text) {
    return NumericalSemigroup(parse_int_list(text));
}

std::vector<Int> NumericalSemigroup::apery_set(Int n) const {
    if (n <= 0 || !contains(n))
        throw Error("apery set needs a nonzero member, got " + std::to_string(n));
    std::vector<Int> result;
    result.reserve(static_cast<std::size_t>(n));
    for (Int r = 0; r < n; ++r) {
        Int h = r;
        while (!contains(h)) h += n;
        result.push_back(h);
    }
    std::sort(result.begin(), result.end());
    return result;
}

SSet alpha_profile(const NumericalSemigroup& H) {
    const Int e = H.multiplicity();
    if (e == 1) throw MultiplicityOne("semigroup is all of N, residue maxima are undefined");

    SSet s;
    for (Int gap : H.gaps()) {
        const Int r = gap % e;
        if (r == 0) continue;
        auto [it, inserted] = s.alphas.emplace(r, gap);
        if (!inserted && gap > it->second) it->second = gap;
    }
    // Each residue 1..e-1 is hit: i itself is a gap.
    if (static_cast<Int>(s.alphas.size()) != e - 1)
        throw Error("residue class without a gap; semigroup data is inconsistent");
    for (const auto& [r, alpha] : s.alphas) s.values.insert(alpha);
    s.b = *s.values.begin();
    s.a = *s.values.rbegin();
    if (s.a != H.frobenius()) throw Error("max residue gap differs from the Frobenius number");
    return s;
}

RingInvariants ring_invariants(const NumericalSemigroup& H) {
    RingInvariants inv;
    inv.multiplicity = H.multiplicity();
    inv.embedding_dimension = H.embedding_dimension();
    inv.v_equals_e = inv.multiplicity == inv.embedding_dimension;
    return inv;
}

bool multiplies_maximal_ideal_into_ring(const NumericalSemigroup& H, Int n) {
    for (Int g : H.generators())
        if (!H.contains(n + g)) return false;
    return true;
}

} // namespace nsring
