#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyper/corpus.hpp"
#include "hyper/detrep.hpp"
#include "hyper/soscert.hpp"
#include "hyper/verdict.hpp"

namespace hyper {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(std::span<const Rational> v);
Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json to_json(const Witness& w);
/// Verdict with its witness; the certificate is embedded when present.
Json to_json(const Verdict& v, std::span<const std::string> names);

Json to_json(const SosCertificate& c, std::span<const std::string> names);
SosCertificate certificate_from_json(const Json& j);

Json to_json(const DeterminantalRep& rep);
DeterminantalRep detrep_from_json(const Json& j);

Json to_json(const VamosReport& r);

}  // namespace hyper
