#pragma once

#include <json.hpp>

#include "delpezzo/linear_systems.hpp"
#include "delpezzo/picard.hpp"
#include "delpezzo/point_spec.hpp"
#include "delpezzo/positivity.hpp"
#include "delpezzo/qpoly.hpp"
#include "delpezzo/seshadri.hpp"

namespace delpezzo {

using Json = nlohmann::json; // sorted keys: stable bytes for golden tests

/// Arbitrary-precision integers serialize as JSON numbers while they
/// fit in 64 bits and as decimal strings beyond that (discriminant
/// coefficients can get large).
Json json_int(const Int& n);

Json to_json(const DivisorClass& c);
Json to_json(const PointSpec& p);
Json to_json(const SeshadriResult& res);
Json to_json(const TableRow& row);
Json to_json(const ExclusionReport& rep);
Json to_json(const PencilSample& s);
Json to_json(const PositivityReport& rep);
Json to_json(const Poly& p);

} // namespace delpezzo
