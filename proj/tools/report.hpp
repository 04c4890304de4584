#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "trigonal/checks.hpp"
#include "trigonal/degen.hpp"
#include "trigonal/elliptic.hpp"
#include "trigonal/sigma.hpp"

namespace trigonal::io {

using nlohmann::ordered_json;

// "re,im" or a plain real literal; locale independent.
cplx parse_complex(const std::string& text);
// Comma-separated reals.
std::vector<cplx> parse_grid(const std::string& text);
// Semicolon-separated complex entries.
CVec parse_vector(const std::string& text);

ordered_json to_json(cplx z);
ordered_json to_json(const CVec& v);
ordered_json to_json(const CMat& m);
ordered_json to_json(const RVec& v);
ordered_json to_json(const FamilyParams& p);
ordered_json to_json(const PeriodData& pd);
ordered_json to_json(const IdentityCheck& c);
ordered_json to_json(const CheckList& rows);
ordered_json to_json(const DegenerationReport& r);
ordered_json to_json(const MainTheoremPoint& m);
ordered_json error_json(const std::string& code, const std::string& message);

std::string checks_csv(const CheckList& rows);
std::string reports_csv(const std::vector<DegenerationReport>& reports);
std::string periods_csv(const PeriodData& pd);

// Lower-case key with primes spelled out: "omega''_13" -> "omega_pp_13".
std::string observable_key(const std::string& name);

}  // namespace trigonal::io
