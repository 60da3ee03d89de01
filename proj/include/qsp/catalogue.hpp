#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsp/satake.hpp"

namespace qsp {

/// Admissible c (and s = 0): bar-invariant multiples of powers of q solving the c-condition.
std::map<int, Scalar> default_c(const SatakeDiagram& d);

/// Names of the bundled diagrams (rank one, rank two, and the higher-rank examples).
std::vector<std::string> catalogue_names();
/// Throws std::out_of_range for unknown names.
DiagramSpec catalogue_spec(const std::string& name);

}  // namespace qsp
