#pragma once

#include <filesystem>
#include <stdexcept>
#include <string_view>

#include "bvpdn/problems.hpp"

namespace bvpdn {

class ProblemParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses a problem description.
///
///   {"type": "poly", "terms": [{"p": 2, "q": 2, "re": 1.0, "im": 0.0}, ...],
///    "max_degree": 12}
///   {"type": "tabulated", "gamma0": [...], "gamma": [...],
///    "g": {"n_r": .., "n_theta": .., "values": [...]}, "c": {"re": .., "im": ..}}
///
/// Sample values are either plain numbers or {"re": .., "im": ..} objects.
/// "im" defaults to 0 and "max_degree" to 12. Tabulated samples sit at
/// theta_k = 2 pi k / n.
ProblemData parse_problem_json(std::string_view text);

/// Reads and parses a problem file. Throws ProblemParseError when the file
/// cannot be read or is malformed.
ProblemData load_problem(const std::filesystem::path& path);

}  // namespace bvpdn
