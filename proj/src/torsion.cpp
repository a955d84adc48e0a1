#include "nsring/torsion.hpp"

#include <algorithm>
#include <numeric>

namespace nsring {

namespace {

void require_same_semigroup(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.semigroup() != b.semigroup())
        throw SemigroupMismatch("ideals live over different semigroups");
}

TorsionReport report_from_exponents(std::vector<Int> exps) {
    TorsionReport rep;
    rep.total_length = static_cast<Int>(exps.size());
    rep.torsionfree = exps.empty();
    for (Int x : exps) rep.per_degree.emplace_back(x, 1);
    rep.witness_degrees = std::move(exps);
    return rep;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<SyzygyGenerator> syzygy_generators(const MonomialIdeal& I) {
    const auto& H = I.semigroup();
    const auto& cs = I.minimal_generators();
    const Int c = H.conductor();

    std::vector<SyzygyGenerator> out;
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            // (c_i + H) meet (c_j + H) is itself a monomial exponent set; its
            // minimal generators are the degrees of the binomial relations.
            const Int lo = std::max(cs[i], cs[j]);
            const Int hi = lo + c;
            std::vector<bool> bits(static_cast<std::size_t>(hi - lo), false);
            for (Int n = lo; n < hi; ++n)
                bits[static_cast<std::size_t>(n - lo)] =
                    H.contains(n - cs[i]) && H.contains(n - cs[j]);
            MonomialIdeal meet = MonomialIdeal::from_window(I.semigroup_ptr(), lo, std::move(bits));
            for (Int d : meet.minimal_generators()) out.push_back({i, j, d});
        }
    }
    return out;
}

TorsionReport torsion_length(const MonomialIdeal& I0, const MonomialIdeal& J, Int extra_degrees) {
    require_same_semigroup(I0, J);
    const MonomialIdeal I = I0.normalized();
    const auto& cs = I.minimal_generators();

    TorsionReport rep;
    if (cs.size() <= 1) return rep; // principal: free of rank one, no torsion

    const auto syz = syzygy_generators(I);
    Int max_syz = syz.front().degree;
    for (const auto& s : syz) max_syz = std::max(max_syz, s.degree);

    const Int d_lo = J.offset() + cs.front();
    const Int d_hi = max_syz + J.tail_start() + extra_degrees;

    std::vector<std::size_t> support;
    for (Int d = d_lo; d < d_hi; ++d) {
        support.clear();
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (J.contains(d - cs[i])) support.push_back(i);
        if (support.size() <= 1) continue;

        UnionFind uf(cs.size());
        for (const auto& s : syz)
            if (J.contains(d - s.degree)) uf.unite(s.i, s.j);

        // Components of the syzygy graph restricted to the support.
        Int components = 0;
        for (std::size_t v : support) {
            bool root_seen = false;
            for (std::size_t w : support) {
                if (w == v) break;
                if (uf.find(w) == uf.find(v)) {
                    root_seen = true;
                    break;
                }
            }
            if (!root_seen) ++components;
        }
        if (components > 1) {
            rep.total_length += components - 1;
            rep.per_degree.emplace_back(d, components - 1);
            rep.witness_degrees.push_back(d);
        }
    }
    rep.torsionfree = rep.total_length == 0;
    return rep;
}

TorsionReport torsion_two_generated(const MonomialIdeal& I0, const MonomialIdeal& J) {
    require_same_semigroup(I0, J);
    const MonomialIdeal I = I0.normalized();
    if (I.mu() != 2)
        throw NotTwoGenerated("colon-quotient torsion needs exactly two generators, got mu = " +
                              std::to_string(I.mu()));
    const MonomialIdeal r = MonomialIdeal::ring(I.semigroup_ptr());
    const MonomialIdeal numerator = colon(J, I);
    const MonomialIdeal denominator = product(colon(r, I), J);
    return report_from_exponents(quotient_exponents(numerator, denominator));
}

TorsionReport torsion_self(const MonomialIdeal& I) { return torsion_length(I, dual(I)); }

TorsionReport colon_square_torsion(const MonomialIdeal& I0) {
    const MonomialIdeal I = I0.normalized();
    if (I.mu() != 2)
        throw NotTwoGenerated("squared-colon torsion needs exactly two generators, got mu = " +
                              std::to_string(I.mu()));
    const MonomialIdeal r = MonomialIdeal::ring(I.semigroup_ptr());
    const MonomialIdeal colon_of_square = colon(r, product(I, I)); // R : I^2
    const MonomialIdeal square_of_colon = product(colon(r, I), colon(r, I));
    return report_from_exponents(quotient_exponents(colon_of_square, square_of_colon));
}

} // namespace nsring
