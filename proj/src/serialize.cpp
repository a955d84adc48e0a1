#include "nsring/serialize.hpp"

#include <sstream>

namespace nsring {

Json to_json(const NumericalSemigroup& H) {
    Json j;
    j["generators"] = H.generators();
    j["frobenius"] = H.frobenius();
    j["conductor"] = H.conductor();
    j["multiplicity"] = H.multiplicity();
    j["genus"] = H.genus();
    j["gaps"] = H.gaps();
    return j;
}

Json to_json(const MonomialIdeal& I) {
    Json j;
    j["offset"] = I.offset();
    j["generators"] = I.minimal_generators();
    j["mu"] = I.mu();
    j["tail_start"] = I.tail_start();
    return j;
}

Json to_json(const TorsionReport& report) {
    Json j;
    j["length"] = report.total_length;
    j["torsionfree"] = report.torsionfree;
    j["witness_degrees"] = report.witness_degrees;
    Json degrees = Json::array();
    for (const auto& [d, k] : report.per_degree) degrees.push_back(Json::array({d, k}));
    j["per_degree"] = degrees;
    return j;
}

Json to_json(const IdealClassification& cls) {
    Json j;
    j["ideal"] = to_json(cls.ideal);
    j["mu"] = cls.mu_ideal;
    j["mu_dual"] = cls.mu_dual;
    j["mu_canonical"] = cls.mu_canonical;
    j["principal"] = cls.is_principal;
    j["canonical_class"] = cls.is_canonical_class;
    j["canonical_map_iso"] = cls.canonical_map_iso;
    j["two_generated_pairing"] = cls.two_generated_pairing;
    j["torsion_length"] = cls.torsion;
    j["torsionfree"] = cls.torsionfree;
    j["counterexample"] = cls.is_counterexample;
    j["gorenstein"] = cls.gorenstein;
    if (cls.gorenstein) {
        j["r_dual_torsionfree"] = cls.r_dual_torsionfree;
        j["counterexample_principal_variant"] = cls.is_counterexample_principal_variant;
    }
    j["end_ring_generators"] = cls.end_ring_generators;
    return j;
}

Json to_json(const SearchReport& report) {
    Json j;
    j["semigroup"] = to_json(*report.semigroup);
    j["total"] = report.total;
    j["gorenstein"] = report.gorenstein;
    Json counts;
    counts["principal"] = report.principal_count;
    counts["canonical"] = report.canonical_count;
    counts["torsion_positive"] = report.torsion_positive_count;
    counts["counterexample"] = report.counterexample_count;
    j["counts"] = counts;

    auto entries = [](const std::vector<ClassifiedIdeal>& list) {
        Json arr = Json::array();
        for (const auto& entry : list) {
            Json e;
            e["gap_exponents"] = entry.gap_exponents;
            e["classification"] = to_json(entry.cls);
            arr.push_back(std::move(e));
        }
        return arr;
    };
    j["counterexamples"] = entries(report.counterexamples);
    j["pairing_hits"] = entries(report.pairing_hits);
    return j;
}

NumericalSemigroup semigroup_from_json(const Json& j) {
    return NumericalSemigroup(j.at("generators").get<std::vector<Int>>());
}

MonomialIdeal ideal_from_json(const SemigroupPtr& H, const Json& j) {
    return MonomialIdeal::from_generators(H, j.at("generators").get<std::vector<Int>>());
}

TorsionReport torsion_report_from_json(const Json& j) {
    TorsionReport report;
    report.total_length = j.at("length").get<Int>();
    report.torsionfree = j.at("torsionfree").get<bool>();
    report.witness_degrees = j.at("witness_degrees").get<std::vector<Int>>();
    for (const auto& entry : j.at("per_degree"))
        report.per_degree.emplace_back(entry.at(0).get<Int>(), entry.at(1).get<Int>());
    return report;
}

std::string monomial_string(const std::vector<Int>& exponents) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i > 0) out << ", ";
        if (exponents[i] == 0)
            out << '1';
        else if (exponents[i] == 1)
            out << 't';
        else
            out << "t^" << exponents[i];
    }
    out << ')';
    return out.str();
}

std::string join(const std::vector<Int>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << ',';
        out << values[i];
    }
    return out.str();
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

} // namespace nsring
