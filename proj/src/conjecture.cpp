#include "nsring/conjecture.hpp"

#include <algorithm>

namespace nsring {

IdealClassification classify(const MonomialIdeal& I, const MonomialIdeal& canonical_ideal) {
    IdealClassification cls{I.normalized()};
    const MonomialIdeal& ideal = cls.ideal;
    const MonomialIdeal j = colon(canonical_ideal, ideal);

    cls.mu_ideal = ideal.mu();
    cls.mu_dual = j.mu();
    cls.mu_canonical = canonical_ideal.mu();
    cls.is_principal = cls.mu_ideal == 1;
    cls.is_canonical_class = cls.mu_dual == 1;

    const bool product_is_canonical = product(ideal, j) == canonical_ideal;
    cls.canonical_map_iso =
        product_is_canonical && cls.mu_ideal * cls.mu_dual == cls.mu_canonical;
    cls.two_generated_pairing =
        cls.canonical_map_iso && cls.mu_ideal == 2 && cls.mu_dual == 2 && cls.mu_canonical == 4;

    const TorsionReport torsion = torsion_length(ideal, j);
    cls.torsion = torsion.total_length;
    cls.torsionfree = torsion.torsionfree;
    cls.is_counterexample = cls.torsionfree && !cls.is_principal && !cls.is_canonical_class;

    cls.gorenstein = cls.mu_canonical == 1;
    if (cls.gorenstein) {
        const MonomialIdeal r = MonomialIdeal::ring(ideal.semigroup_ptr());
        cls.r_dual_torsionfree = torsion_length(ideal, colon(r, ideal)).torsionfree;
        cls.is_counterexample_principal_variant = cls.r_dual_torsionfree && !cls.is_principal;
    }

    cls.end_ring_generators = end_ring(ideal).ring->generators();
    return cls;
}

IdealClassification classify(const MonomialIdeal& I) {
    return classify(I, MonomialIdeal::canonical(I.semigroup_ptr()));
}

PairingEvidence two_generated_pairing(const MonomialIdeal& I0) {
    const MonomialIdeal I = I0.normalized();
    const MonomialIdeal k = MonomialIdeal::canonical(I.semigroup_ptr());
    const MonomialIdeal j = colon(k, I);
    PairingEvidence ev;
    ev.mu_ideal = I.mu();
    ev.mu_dual = j.mu();
    ev.mu_canonical = k.mu();
    ev.product_is_canonical = product(I, j) == k;
    ev.holds = ev.mu_ideal == 2 && ev.mu_dual == 2 && ev.mu_canonical == 4 &&
               ev.product_is_canonical;
    return ev;
}

DualPairProfile dual_pair_profile(const MonomialIdeal& I0) {
    const MonomialIdeal I = I0.normalized();
    if (!two_generated_pairing(I).holds)
        throw ConditionNotSatisfied("the two-generated pairing condition does not hold");

    const auto& H = I.semigroup();
    const MonomialIdeal j = dual(I);

    DualPairProfile p;
    p.a = H.frobenius();
    p.c1 = I.minimal_generators()[1];
    p.c2 = j.minimal_generators()[1];
    p.b1 = p.a - p.c1;
    p.b2 = p.a - p.c2;
    p.b3 = p.a - p.c1 - p.c2;
    p.memberships = {
        !H.contains(p.a),
        H.contains(2 * p.b1 - p.a),
        H.contains(2 * p.b2 - p.a),
        H.contains(p.b2 + p.b3 - p.a),
        H.contains(p.b1 + p.b3 - p.a),
        H.contains(2 * p.b2 - p.b3),
    };
    return p;
}

bool pairing_multiplicity_check(const MonomialIdeal& I) {
    if (!two_generated_pairing(I).holds)
        throw ConditionNotSatisfied("the two-generated pairing condition does not hold");
    return I.semigroup().multiplicity() >= 8;
}

bool iso_multiplicity_inequality(const MonomialIdeal& I0) {
    const MonomialIdeal I = I0.normalized();
    const MonomialIdeal k = MonomialIdeal::canonical(I.semigroup_ptr());
    const MonomialIdeal j = colon(k, I);
    const Int r = I.mu();
    const Int s = j.mu();
    const bool iso = product(I, j) == k && r * s == k.mu();
    if (!iso || r < 2 || s < 2)
        throw PreconditionNotMet("needs the evaluation isomorphism with both counts >= 2");
    return I.semigroup().multiplicity() > (r + 1) * s;
}

IdealClassification change_of_rings(const MonomialIdeal& I) {
    return classify(end_ring(I).ideal_over_b.normalized());
}

std::vector<std::vector<Int>> enumerate_gap_filters(const NumericalSemigroup& H,
                                                    std::uint64_t cap) {
    const auto& gaps = H.gaps();
    const std::size_t m = gaps.size();

    // Gaps forced into a filter by the presence of a smaller one.
    std::vector<std::vector<std::size_t>> forced(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (H.contains(gaps[j] - gaps[i])) forced[i].push_back(j);

    std::vector<std::vector<Int>> filters;
    std::vector<bool> included(m, false);
    std::uint64_t count = 0;

    // Decide gaps from the largest down; including a gap is legal only when
    // everything it forces is already in.
    auto dfs = [&](auto&& self, std::size_t idx) -> void {
        if (idx == 0) {
            if (++count > cap)
                throw EnumerationBudgetExceeded("more than " + std::to_string(cap) +
                                                " ideals in the enumeration");
            std::vector<Int> filter;
            for (std::size_t i = 0; i < m; ++i)
                if (included[i]) filter.push_back(gaps[i]);
            filters.push_back(std::move(filter));
            return;
        }
        const std::size_t i = idx - 1;
        self(self, i);
        bool legal = true;
        for (std::size_t j : forced[i]) {
            if (!included[j]) {
                legal = false;
                break;
            }
        }
        if (legal) {
            included[i] = true;
            self(self, i);
            included[i] = false;
        }
    };
    dfs(dfs, m);

    std::sort(filters.begin(), filters.end());
    return filters;
}

namespace {

MonomialIdeal ideal_from_filter(const SemigroupPtr& H, const std::vector<Int>& filter) {
    const Int c = H->conductor();
    std::vector<bool> bits(static_cast<std::size_t>(c), false);
    for (Int n = 0; n < c; ++n) bits[static_cast<std::size_t>(n)] = H->contains(n);
    for (Int g : filter) bits[static_cast<std::size_t>(g)] = true;
    return MonomialIdeal::from_window(H, 0, std::move(bits));
}

// Deterministic search order: fewest adjoined gaps first, then lexicographic.
void sort_for_search(std::vector<std::vector<Int>>& filters) {
    std::sort(filters.begin(), filters.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
}

} // namespace

std::vector<MonomialIdeal> enumerate_ideals(const SemigroupPtr& H, std::uint64_t cap) {
    auto filters = enumerate_gap_filters(*H, cap);
    std::vector<MonomialIdeal> ideals;
    ideals.reserve(filters.size());
    for (const auto& f : filters) ideals.push_back(ideal_from_filter(H, f));
    return ideals;
}

SearchReport search(const SemigroupPtr& H, std::uint64_t cap,
                    const std::function<void(const ClassifiedIdeal&)>& sink) {
    auto filters = enumerate_gap_filters(*H, cap);
    sort_for_search(filters);

    const MonomialIdeal k = MonomialIdeal::canonical(H);

    SearchReport report;
    report.semigroup = H;
    report.gorenstein = k.mu() == 1;
    report.total = filters.size();

    for (const auto& filter : filters) {
        ClassifiedIdeal entry{filter, classify(ideal_from_filter(H, filter), k)};
        const auto& cls = entry.cls;
        if (cls.is_principal)
            ++report.principal_count;
        else if (cls.is_canonical_class)
            ++report.canonical_count;
        else if (!cls.torsionfree)
            ++report.torsion_positive_count;
        else
            ++report.counterexample_count;

        if (cls.is_counterexample) report.counterexamples.push_back(entry);
        if (cls.two_generated_pairing) report.pairing_hits.push_back(entry);
        if (sink) sink(entry);
    }
    return report;
}

void for_each_numerical_semigroup(Int genus_max, Int mult_max,
                                  const std::function<bool(const NumericalSemigroup&)>& visit) {
    // Children of H are obtained by removing one minimal generator beyond the
    // Frobenius number; every semigroup of genus g+1 arises exactly once.
    auto dfs = [&](auto&& self, const NumericalSemigroup& H) -> void {
        if (H.multiplicity() > mult_max) return;
        if (!visit(H)) return;
        if (H.genus() >= genus_max) return;
        for (Int x : H.generators()) {
            if (x <= H.frobenius()) continue;
            const Int least = H.multiplicity() == x
                                  ? [&] {
                                        Int n = x + 1;
                                        while (!H.contains(n)) ++n;
                                        return n;
                                    }()
                                  : H.multiplicity();
            std::vector<Int> gens;
            for (Int n = 1; n <= x + least; ++n)
                if (n != x && H.contains(n)) gens.push_back(n);
            self(self, NumericalSemigroup(std::move(gens)));
        }
    };
    dfs(dfs, NumericalSemigroup({1}));
}

} // namespace nsring
