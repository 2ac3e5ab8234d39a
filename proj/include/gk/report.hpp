#pragma once

// JSON views of library results, shared by the C API and the tests.

#include <string_view>

#include "json.hpp"

#include "gk/extender.hpp"
#include "gk/generators.hpp"
#include "gk/membership.hpp"
#include "gk/oracle.hpp"
#include "gk/small_k.hpp"

namespace gk {

using Json = nlohmann::json;

Json to_json(const Cycle& c);
Json to_json(const MembershipReport& r);
Json to_json(const MembershipPredicates& p);
Json to_json(const CanonicalForm& f);
Json to_json(const HamCertificate& c);
Json to_json(const ExtensionStep& s);
Json to_json(const HamiltonizeResult& r);
Json to_json(const OracleResult& r);
Json to_json(const IsomorphismResult& r);
Json to_json(const Layout& l);
Json to_json(const ValidationReport& r);

std::string_view to_string(OracleOutcome o);

// Accepts a bare array or an object with a "cycle" array.
Cycle cycle_from_json(std::string_view text);

}  // namespace gk
