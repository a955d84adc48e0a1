#pragma once

/**
 * @file serialize.hpp
 * @brief JSON and CSV encodings of the core value types.
 *
 * Field order is fixed so identical inputs always produce byte-identical
 * output. Every JSON document re-parses into a value equal to the original.
 */

#include <string>

#include <json.hpp>

#include "nsring/conjecture.hpp"

namespace nsring {

using Json = nlohmann::ordered_json;

Json to_json(const NumericalSemigroup& H);
Json to_json(const MonomialIdeal& I);
Json to_json(const TorsionReport& report);
Json to_json(const IdealClassification& cls);
Json to_json(const SearchReport& report);

NumericalSemigroup semigroup_from_json(const Json& j);
MonomialIdeal ideal_from_json(const SemigroupPtr& H, const Json& j);
TorsionReport torsion_report_from_json(const Json& j);

/// "(1, t, t^3, t^4)" for exponents {0, 1, 3, 4}.
std::string monomial_string(const std::vector<Int>& exponents);

/// "0,1,3,4"
std::string join(const std::vector<Int>& values);

/// CSV field, quoted when it contains a comma or quote.
std::string csv_field(const std::string& value);

} // namespace nsring
