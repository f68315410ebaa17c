#pragma once

#include <stdexcept>
#include <string>

namespace momst {

// Violation of an internal contract (bad arguments, broken invariants).
// These indicate programming errors, not bad user input.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// Input graph is disconnected, so no spanning tree exists.
struct NoSpanningTreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed instance or results file. Carries the 1-based line number.
struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"),
        line(line_no) {}
};

// Instance generator could not reach its target (e.g. correlation band).
struct GenerationError : std::runtime_error {
  double achieved;
  GenerationError(const std::string& msg, double achieved_value)
      : std::runtime_error(msg), achieved(achieved_value) {}
};

// Prufer code entry outside the valid node range.
struct InvalidCodeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace momst
