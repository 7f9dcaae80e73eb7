#pragma once

#include <string>

#include "bvpdn/bounds.hpp"
#include "bvpdn/verify.hpp"

namespace bvpdn {

/// {"seed", "config", "passed", "records": [...]} with keys in sorted order and
/// shortest round-trip doubles; non-finite numbers become null.
std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

/// {"L1", "L2", "L3", "c_abs", "L4", "L5", "M1", "M2", "r0", "R0_lower",
///  "bracket", "iterations", "N": [{"t", "N1", "N2", "N3", "N4"}, ...]}
std::string to_json(const BoundsReport& report);
std::string to_text(const BoundsReport& report);

}  // namespace bvpdn
