// Acceptance suite: one criterion per numbered check, one pass/fail line
// each, exact integer equality throughout, wall-clock limits enforced where
// stated. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nsring/conjecture.hpp"

using namespace nsring;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
    if (!condition) throw Failure(message);
}

template <class T>
void require_eq(const T& got, const T& want, const std::string& what) {
    if (got == want) return;
    std::ostringstream out;
    out << what << ": got " << got << ", want " << want;
    throw Failure(out.str());
}

SemigroupPtr sg(std::vector<Int> gens) {
    return std::make_shared<const NumericalSemigroup>(std::move(gens));
}

SemigroupPtr interval(Int lo, Int hi) {
    std::vector<Int> gens;
    for (Int g = lo; g <= hi; ++g) gens.push_back(g);
    return sg(std::move(gens));
}

// Structural properties accumulated across every enumerated ideal of the
// search criteria: double-dual reflexivity, and the multiplicity inequality
// for torsionfree ideals realizing the evaluation isomorphism nontrivially.
struct PropertyAudit {
    std::uint64_t ideals = 0;
    std::uint64_t reflexivity_failures = 0;
    std::uint64_t inequality_cases = 0;
    std::uint64_t inequality_failures = 0;
};

SearchReport audited_search(const SemigroupPtr& H, std::uint64_t cap, PropertyAudit& audit) {
    MonomialIdeal k = MonomialIdeal::canonical(H);
    const Int e = H->multiplicity();
    return search(H, cap, [&](const ClassifiedIdeal& entry) {
        const IdealClassification& cls = entry.cls;
        ++audit.ideals;
        if (colon(k, colon(k, cls.ideal)) != cls.ideal) ++audit.reflexivity_failures;
        if (cls.torsionfree && cls.canonical_map_iso && cls.mu_ideal >= 2 && cls.mu_dual >= 2) {
            ++audit.inequality_cases;
            if (e <= (cls.mu_ideal + 1) * cls.mu_dual) ++audit.inequality_failures;
        }
    });
}

class Harness {
public:
    void criterion(int number, const std::string& what, double limit_seconds,
                   const std::function<void()>& body) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            body();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        const double seconds = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
        total_seconds_ += seconds;
        if (failure.empty() && limit_seconds > 0 && seconds >= limit_seconds) {
            std::ostringstream out;
            out << "time limit " << limit_seconds << " s exceeded";
            failure = out.str();
        }
        std::printf("criterion %2d: %s  %7.3f s  %s\n", number,
                    failure.empty() ? "PASS" : "FAIL", seconds, what.c_str());
        if (!failure.empty()) {
            std::printf("              %s\n", failure.c_str());
            ok_ = false;
        }
    }

    int finish() {
        std::printf("acceptance: %s in %.1f s\n", ok_ ? "all criteria passed" : "FAILURES",
                    total_seconds_);
        if (total_seconds_ >= 60.0) {
            std::printf("acceptance: total runtime exceeded 60 s\n");
            ok_ = false;
        }
        return ok_ ? 0 : 1;
    }

private:
    bool ok_ = true;
    double total_seconds_ = 0;
};

} // namespace

int main() {
    Harness harness;
    PropertyAudit audit; // filled by criteria 5-8, reported by 10 and 11

    harness.criterion(1, "colon algebra around (1, t) at multiplicity 8", 0.1, [] {
        auto h = sg({8, 11, 14, 15});
        MonomialIdeal r = MonomialIdeal::ring(h);
        MonomialIdeal i = MonomialIdeal::from_generators(h, {0, 1});
        MonomialIdeal ri = colon(r, i);
        require(ri.minimal_generators() == std::vector<Int>{14, 15, 24, 27}, "R : I generators");
        require(colon(r, product(i, i)).minimal_generators() ==
                    std::vector<Int>{14, 23, 24, 26, 27},
                "R : I^2 generators");
        MonomialIdeal sq = product(ri, ri);
        require(sq == MonomialIdeal::from_generators(h, {28, 29, 30, 38}),
                "(R : I)^2 as an ideal");
        require(!sq.contains(14), "t^14 must be outside (R : I)^2");
        TorsionReport t = colon_square_torsion(i);
        require(t.total_length > 0, "(R : I^2) / (R : I)^2 must have positive length");
        require_eq<Int>(t.total_length, 12, "length of (R : I^2) / (R : I)^2");
    });

    harness.criterion(2, "dual pair (1, t), (1, t^3) and its single torsion witness", 0.1, [] {
        auto h = sg({8, 11, 14, 15});
        MonomialIdeal r = MonomialIdeal::ring(h);
        MonomialIdeal i = MonomialIdeal::from_generators(h, {0, 1});
        MonomialIdeal k = MonomialIdeal::canonical(h);
        require(k.minimal_generators() == std::vector<Int>{0, 1, 3, 4}, "canonical generators");
        MonomialIdeal j = colon(k, i);
        require(j.minimal_generators() == std::vector<Int>{0, 3}, "K : I generators");
        require(product(i, j) == k, "I J = K");
        require_eq<Int>(i.mu(), 2, "mu(I)");
        require_eq<Int>(j.mu(), 2, "mu(J)");
        require_eq<Int>(k.mu(), 4, "mu(K)");
        require(two_generated_pairing(i).holds, "pairing condition");
        require(colon(j, i).minimal_generators() == std::vector<Int>{14, 15, 16, 17, 18},
                "J : I generators");
        require(product(colon(r, i), j) ==
                    MonomialIdeal::from_generators(h, {14, 15, 17, 18, 24, 27}),
                "(R : I) J as an ideal");
        TorsionReport two = torsion_two_generated(i, j);
        require_eq<Int>(two.total_length, 1, "torsion length");
        require(two.witness_degrees == std::vector<Int>{16}, "witness exponent");
        require_eq<Int>(torsion_length(i, j).total_length, 1, "graded algorithm length");
    });

    harness.criterion(3, "torsionfree pair at multiplicity 9 is a counterexample", 0.1, [] {
        auto h = sg({9, 10, 11, 12, 15});
        MonomialIdeal r = MonomialIdeal::ring(h);
        MonomialIdeal i = MonomialIdeal::from_generators(h, {0, 1});
        MonomialIdeal k = MonomialIdeal::canonical(h);
        require(k.minimal_generators() == std::vector<Int>{0, 1, 3, 4}, "canonical generators");
        MonomialIdeal j = colon(k, i);
        require(j.minimal_generators() == std::vector<Int>{0, 3}, "K : I generators");
        require(colon(r, i).minimal_generators() == std::vector<Int>{9, 10, 11},
                "R : I generators");
        require(colon(j, i).minimal_generators() == std::vector<Int>{9, 10, 11, 12, 13, 14},
                "J : I generators");
        require(product(colon(r, i), j) == colon(j, i), "(R : I) J = J : I");
        require_eq<Int>(torsion_length(i, j).total_length, 0, "torsion length");
        IdealClassification cls = classify(i);
        require(cls.is_counterexample, "classification must flag the counterexample");
    });

    harness.criterion(4, "residue maxima and socle shift at multiplicity 7", 0, [] {
        auto h = sg({7, 22, 23, 25, 38, 40});
        SSet s = alpha_profile(*h);
        // the full set of residue maxima; the five printed values sit inside it
        require(s.values == std::set<Int>{15, 16, 18, 31, 33, 41}, "residue maxima S");
        for (Int v : {15, 16, 18, 33, 41})
            require(s.values.count(v) == 1, "printed maximum missing from S");
        require_eq<Int>(s.a, 41, "a");
        require_eq<Int>(s.b, 15, "b");
        require_eq<Int>(h->embedding_dimension(), 6, "embedding dimension");
        require_eq<Int>(h->multiplicity(), 7, "multiplicity");
        require(multiplies_maximal_ideal_into_ring(*h, s.b), "b + g in H for every generator");
    });

    harness.criterion(5, "exhaustive search at <8,11,14,15> finds no counterexample", 30,
                      [&audit] {
                          SearchReport report =
                              audited_search(sg({8, 11, 14, 15}), std::uint64_t{1} << 15, audit);
                          require_eq<std::uint64_t>(report.total, 647, "enumerated ideals");
                          require_eq<std::uint64_t>(report.counterexample_count, 0,
                                                    "counterexamples");
                      });

    harness.criterion(6, "five multiplicity-8 pairing rings: hits, torsion, clean searches", 30,
                      [&audit] {
                          struct Item {
                              std::vector<Int> gens;
                              std::vector<Int> canonical;
                              std::vector<Int> ideal;
                          };
                          const Item items[] = {
                              {{8, 9, 10, 13}, {0, 1, 3, 4}, {0, 1}},
                              {{8, 11, 12, 13}, {0, 1, 3, 4}, {0, 1}},
                              {{8, 11, 14, 23}, {0, 3, 9, 12}, {0, 3}},
                              {{8, 13, 17, 18}, {0, 1, 5, 6}, {0, 1}},
                              {{8, 13, 18, 25}, {0, 5, 7, 12}, {0, 5}},
                          };
                          for (const auto& item : items) {
                              auto h = sg(item.gens);
                              require(MonomialIdeal::canonical(h).minimal_generators() ==
                                          item.canonical,
                                      "canonical generators");
                              MonomialIdeal i = MonomialIdeal::from_generators(h, item.ideal);
                              require(two_generated_pairing(i).holds, "pairing condition");
                              require(torsion_self(i).total_length > 0,
                                      "self tensor must have torsion");
                              SearchReport report =
                                  audited_search(h, std::uint64_t{1} << 22, audit);
                              require_eq<std::uint64_t>(report.counterexample_count, 0,
                                                        "counterexamples");
                          }
                      });

    harness.criterion(7, "no pairing condition below multiplicity 8 (genus <= 12 scan)", 0,
                      [&audit] {
                          std::uint64_t semigroups = 0, hits = 0, counterexamples = 0;
                          for_each_numerical_semigroup(
                              12, 7, [&](const NumericalSemigroup& h) {
                                  SearchReport report = audited_search(
                                      std::make_shared<const NumericalSemigroup>(h),
                                      std::uint64_t{1} << 22, audit);
                                  ++semigroups;
                                  hits += report.pairing_hits.size();
                                  counterexamples += report.counterexample_count;
                                  return true;
                              });
                          require_eq<std::uint64_t>(semigroups, 719, "semigroups scanned");
                          require_eq<std::uint64_t>(hits, 0, "pairing condition hits");
                          require_eq<std::uint64_t>(counterexamples, 0, "counterexamples");
                      });

    harness.criterion(8, "interval families are clean; near-maximal ones are Gorenstein", 0,
                      [&audit] {
                          for (Int a = 3; a <= 6; ++a) {
                              SearchReport maximal =
                                  audited_search(interval(a, 2 * a - 1), std::uint64_t{1} << 22,
                                                 audit);
                              require_eq<std::uint64_t>(maximal.counterexample_count, 0,
                                                        "counterexamples in <a..2a-1>");
                              SearchReport gorenstein =
                                  audited_search(interval(a, 2 * a - 2), std::uint64_t{1} << 22,
                                                 audit);
                              require_eq<std::uint64_t>(gorenstein.counterexample_count, 0,
                                                        "counterexamples in <a..2a-2>");
                              require(gorenstein.gorenstein, "<a..2a-2> must be Gorenstein");
                          }
                      });

    harness.criterion(9, "graded algorithm equals the colon-quotient formula on 120 instances", 0,
                      [] {
                          std::mt19937_64 rng(414213562);
                          std::uniform_int_distribution<Int> count_dist(2, 5);
                          std::uniform_int_distribution<Int> gen_dist(2, 24);
                          int done = 0;
                          while (done < 120) {
                              std::vector<Int> gens;
                              const Int count = count_dist(rng);
                              for (Int k = 0; k < count; ++k) gens.push_back(gen_dist(rng));
                              SemigroupPtr h;
                              try {
                                  h = std::make_shared<const NumericalSemigroup>(gens);
                              } catch (const GcdNotOne&) {
                                  continue;
                              }
                              if (h->genus() > 12 || h->multiplicity() < 2) continue;
                              const auto& gaps = h->gaps();
                              std::uniform_int_distribution<std::size_t> pick(0, gaps.size() - 1);
                              MonomialIdeal i =
                                  MonomialIdeal::from_generators(h, {0, gaps[pick(rng)]});
                              require_eq<Int>(i.mu(), 2, "instance must be two-generated");
                              std::uniform_int_distribution<Int> exp_dist(
                                  -8, 2 * h->conductor() + 4);
                              std::uniform_int_distribution<Int> jcount(1, 4);
                              std::vector<Int> jexps;
                              const Int jc = jcount(rng);
                              for (Int k = 0; k < jc; ++k) jexps.push_back(exp_dist(rng));
                              MonomialIdeal j = MonomialIdeal::from_generators(h, jexps);
                              require_eq<Int>(torsion_length(i, j).total_length,
                                              torsion_two_generated(i, j).total_length,
                                              "torsion lengths must agree");
                              ++done;
                          }
                      });

    harness.criterion(10, "double dual returns every enumerated ideal", 0, [&audit] {
        require(audit.ideals > 100000, "audit must have covered the search criteria");
        require_eq<std::uint64_t>(audit.reflexivity_failures, 0, "reflexivity failures");
    });

    harness.criterion(11, "multiplicity bound for torsionfree evaluation isomorphisms", 0,
                      [&audit] {
                          require_eq<std::uint64_t>(audit.inequality_failures, 0,
                                                    "inequality failures in criteria 5-8");
                          // vacuous at multiplicity <= 7; positive instance at multiplicity 9
                          PropertyAudit nine;
                          audited_search(sg({9, 10, 11, 12, 15}), std::uint64_t{1} << 22, nine);
                          require(nine.inequality_cases >= 2,
                                  "counterexample pair must realize the isomorphism");
                          require_eq<std::uint64_t>(nine.inequality_failures, 0,
                                                    "inequality failures at multiplicity 9");
                          MonomialIdeal i =
                              MonomialIdeal::from_generators(sg({9, 10, 11, 12, 15}), {0, 1});
                          require(iso_multiplicity_inequality(i), "9 > (2 + 1) * 2");
                      });

    return harness.finish();
}
