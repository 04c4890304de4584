#pragma once

#include <string>
#include <vector>

#include "trigonal/checks.hpp"
#include "trigonal/periods.hpp"

namespace trigonal {

struct VerifyOptions {
  FamilyParams params{};
  cplx elliptic_s{0.01L, 0.0L};
  std::uint64_t seed = 7;
  PeriodOptions periods{};
};

const std::vector<std::string>& suite_names();

CheckList verify_periods(const VerifyOptions& opts);
CheckList verify_theta(const VerifyOptions& opts);
CheckList verify_sigma(const VerifyOptions& opts);
CheckList verify_al(const VerifyOptions& opts);
CheckList verify_elliptic(const VerifyOptions& opts);
CheckList verify_series(const VerifyOptions& opts);

// "all" or one of suite_names(). Throws InvalidParam for unknown names.
CheckList run_suites(const std::string& suite, const VerifyOptions& opts);

// Random genus-3 parameters: b = r e^{i phi}, r in [1.5, 4], phi in
// [-0.6, 0.6], ordered so the legs leave the base point canonically;
// |s| in [1e-3, 0.3], arg s in (-pi + 0.3, pi - 0.3).
FamilyParams random_family(UniformStream& rng);

// Random complex vector with entries in the box [-r, r] + i [-r, r].
CVec random_vector(UniformStream& rng, int n, real r);

}  // namespace trigonal
