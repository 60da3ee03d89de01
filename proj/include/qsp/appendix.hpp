#pragma once

#include <string>
#include <vector>

#include "qsp/report.hpp"

namespace qsp {

/// Names of the rank-two lemma groups, in the order the suite runs them.
std::vector<std::string> appendix_lemmas();

/// Checks every relation of one lemma group for n = 1..bound in the PBW normal form.
/// The AIII_n groups take the family index `family_n` (4 is the smallest member).
CheckReport appendix_lemma(const std::string& lemma, int bound, int family_n = 4);

/// All groups; the AIII_n groups at family_n.
CheckReport appendix_identity_suite(int bound, int family_n = 4);

}  // namespace qsp
