#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pargeo/algebra.hpp"

namespace pargeo {

/// Parse or validation failure; the message names the offending field.
struct descriptor_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GradingDescriptor {
  bool canonical = true;
  std::string geometry;           // canonical form
  int block = 0;                  // canonical form, block-dependent geometries
  std::vector<Rational> rep_diag; // element form: diagonal action on the rep
};

enum class CandidateKind { metric, complex_structure, subspace };

struct CandidateDescriptor {
  CandidateKind kind = CandidateKind::metric;
  Matrix data;  // square matrix, or basis columns for the subspace form
};

struct DecompositionDescriptor {
  std::vector<Matrix> pieces;  // basis columns per horizontal piece
  Matrix line;                 // single column
};

struct RunDescriptor {
  AlgebraSpec algebra;
  std::optional<GradingDescriptor> grading;
  std::optional<CandidateDescriptor> candidate;
  std::optional<DecompositionDescriptor> decomposition;
  std::string output = "text";
  std::optional<std::uint64_t> seed;
  std::string echo;  // normalized descriptor, compact JSON
};

/// Parses the JSON descriptor format:
///   {"algebra": {"family":"so","p":2,"q":3},
///    "grading": {"type":"canonical","geometry":"conformal"} |
///               {"type":"element","rep_diag":["1","0","0","0","-1"]},
///    "candidate": {"metric": [[...]]} | {"complex_structure": [[...]]} |
///                 {"subspace": [[...basis column...], ...]},
///    "decomposition": {"pieces": [[[...column...], ...], ...],
///                      "line": [...column...]},
///    "output": "text"|"json", "seed": N}
/// Rationals are "p/q" strings or integers. Only "algebra" is required.
RunDescriptor parse_run_descriptor(const std::string& text);

}  // namespace pargeo
