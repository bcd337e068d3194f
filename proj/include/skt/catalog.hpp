#pragma once

#include <optional>
#include <random>

#include "skt/notation.hpp"
#include "skt/spectral_decision.hpp"

namespace skt {

struct CatalogErratum {
  std::string column;
  std::string printed;
  std::string computed;
  std::string note;
};

struct IsoCheck {
  std::string other;
  std::map<std::string, std::string> other_bind;  // expressions in this entry's params
};

// One row of the six-dimensional classification, with the expected flag
// columns as predicates on the parameters.
struct CatalogEntry {
  std::string id;
  std::string display;
  std::string equations;
  std::vector<std::string> params;
  std::string domain = "always";
  std::map<std::string, std::string> expected;  // column -> predicate (absent: see errata)
  std::string brf_exists;
  std::string brf_metric;
  std::optional<std::string> unimodular_computed;
  std::vector<CatalogErratum> errata;
  std::vector<Bindings> specials;
  std::vector<IsoCheck> iso_checks;
  std::string notes;

  const CatalogErratum* erratum_for(const std::string& column) const;
};

struct Catalog {
  int dim = 6;
  std::vector<CatalogEntry> entries;
  const CatalogEntry* find(const std::string& id) const;
};

const char* builtin_catalog_json();
Catalog load_catalog(const std::string& json_text);
Catalog builtin_catalog();

// Deterministic parameter samples: every special value plus generic_count
// seeded random rationals per entry, all inside the entry's domain.
std::vector<Bindings> sample_bindings(const CatalogEntry& entry, int generic_count, uint64_t seed);

struct ComputedFlags {
  bool kahler = false;
  bool kahler_exists = false;
  bool skt = false;
  bool lcskt = false;
  bool unimodular = false;
  bool lcb_metric = false;
  bool lcb_exists = false;
  bool brf_exists = false;
  bool brf_metric = false;
};

// Canonical structure: J f_1 = f_6, J f_2 = f_3, J f_4 = f_5, identity
// metric. Cross-checks the metric-fixed verdicts against the existence
// procedures where the two coincide on catalog instances.
ComputedFlags compute_catalog_flags(const CatalogEntry& entry, const Bindings& binding);

struct CellDiscrepancy {
  std::string entry_id;
  std::string column;
  std::string binding;
  bool computed = false;
  std::string printed;  // the recorded predicate text
  bool documented = false;  // covered by the entry's errata records
  std::string note;
};

struct EntryReport {
  std::string entry_id;
  int samples = 0;
  bool definition_ok = true;        // parses, Jacobi holds, J integrable
  bool computed_predicates_ok = true;  // computed flags match the recorded computed predicates
  std::vector<CellDiscrepancy> discrepancies;
  std::vector<std::string> failures;  // undocumented mismatches / internal errors

  bool passed() const { return definition_ok && computed_predicates_ok && failures.empty(); }
};

// columns: subset of {kahler, skt, lcskt, unimodular, lcb, brf}; empty means
// all six.
EntryReport verify_entry(const Catalog& catalog, const CatalogEntry& entry, int generic_samples,
                         uint64_t seed, const std::vector<std::string>& columns = {});

// Matrix templates of the dimension-six classification: the five shapes that
// admit a complex structure and the seven twisted-SKT-admissible shapes.
enum class ShapeSource { Complex5, TwistedSkt7 };

struct ShapeMatch {
  ShapeSource source;
  int index;  // 1-based position in the respective list
  std::string description;
  std::map<std::string, double> params;
};

// Identifies the template A instantiates from its tolerance-clustered
// spectral normal form; nullopt when no template in the list matches.
std::optional<ShapeMatch> match_shape(const RatMat& A, ShapeSource source, double tol = 1e-9);

// Real 4x4 lift of a complex 2x2 matrix through the canonical pairing; the
// lift commutes with canonical_J1(4).
RatMat complex_lift(const GMat& a);

// Seeded generators for property suites: instances of the seven admissible
// shapes (optionally conjugated by a random J1-commuting rational matrix) and
// inadmissible instances (complex Jordan blocks or two distinct nonzero real
// parts).
RatMat random_admissible_A(std::mt19937_64& rng, bool conjugate);
RatMat random_inadmissible_A(std::mt19937_64& rng);
Rat random_rational(std::mt19937_64& rng, bool allow_zero = true);
RatMat random_j_compatible_metric(std::mt19937_64& rng, int dim);

// Every 4-dimensional almost abelian (g, J) admits a twisted SKT metric.
bool dim4_theorem(const LieAlgebra& g, const RatMat& J, double tol = 1e-9);

// Table of closed-form alpha families: builds row-condition samples, checks
// construct_alpha against solve_alpha, and records where the recorded row
// families of the source table deviate (rows 4/5 are swapped there; row 6
// needs A^T v = 0 for its two-parameter form).
struct AlphaRowReport {
  int row = 0;
  int samples = 0;
  bool families_match = true;  // construct_alpha == solve_alpha on every sample
  std::vector<std::string> notes;
  std::vector<std::string> failures;
};

std::vector<AlphaRowReport> verify_alpha_table(uint64_t seed, int samples_per_row = 5);

}  // namespace skt
