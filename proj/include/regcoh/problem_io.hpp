#ifndef REGCOH_PROBLEM_IO_HPP
#define REGCOH_PROBLEM_IO_HPP

#include <optional>

#include "regcoh/chamber_fan.hpp"

namespace regcoh {

enum class ProblemMode { Regular, Wonderful, Toric };

/// A parsed and fully validated problem file.
struct Problem {
  ProblemMode mode = ProblemMode::Regular;
  RootDatum rd;
  PLFunction h;
  std::optional<RatVector> default_mu;
  std::optional<int> default_degree;
};

/// Parses the JSON problem format; every validation failure carries the
/// offending field path.
Problem parse_problem(const std::string& path);
Problem parse_problem_text(const std::string& text, const std::string& origin);

}  // namespace regcoh

#endif  // REGCOH_PROBLEM_IO_HPP
