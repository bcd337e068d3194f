#pragma once

#include <map>
#include <string>
#include <vector>

#include "skt/verdicts.hpp"

namespace skt {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

using Bindings = std::map<std::string, Rat>;

// Structure-equation notation: "(f16, p*f26, 0, ...)" lists (df^1, df^2, ...).
// Dimension is the component count; the two-digit shorthand f16 is only legal
// for dim <= 9, f[i,j] is mandatory above. All free parameters must be bound.
// A Jacobi violation is reported as a warning, not an error (some inputs are
// deliberately non-Lie for negative tests).
struct ParsedAlgebra {
  LieAlgebra algebra;
  bool jacobi_ok = true;
  std::vector<std::string> warnings;
};

ParsedAlgebra parse_notation(const std::string& text, const Bindings& bindings = {});

// Canonical printer; parse(print(g)) reproduces g exactly.
std::string print_notation(const LieAlgebra& g);

// Predicate mini-language over bound rational parameters, used by the catalog
// expected-flag columns: "always", "never", "p = 0", "p != -1/2",
// "p in {0, -1/2}", "p + 4*q = 0", "p >= 1", combinations with "and"/"or".
bool eval_predicate(const std::string& pred, const Bindings& bindings);

// Rational linear-expression evaluator backing the predicates.
Rat eval_expression(const std::string& expr, const Bindings& bindings);

std::string rat_vec_str(const RatVec& v);

// Report emitters. Deterministic output for a fixed verdict.
enum class ReportFormat { Json, Markdown };
std::string emit_report(const std::string& name, const LieAlgebra& g, const StructureVerdict& v,
                        ReportFormat format);

std::string alpha_space_str(const AlphaSpace& s);

// Matrix file I/O (JSON, rationals as "num/den" strings, schema skt-lab/1).
std::string matrix_to_json(const RatMat& m);
RatMat matrix_from_json(const std::string& text);

}  // namespace skt
