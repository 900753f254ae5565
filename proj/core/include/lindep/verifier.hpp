#pragma once

// Claim-by-claim verification: brute-force oracles and exact spectra of the
// constructed graph compared against the closed-form predictions.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lindep/exact_poly.hpp"
#include "lindep/gf.hpp"
#include "lindep/graph.hpp"
#include "lindep/invariants.hpp"
#include "lindep/spectra.hpp"

namespace lindep::verifier {

using spectra::Real;

inline constexpr int kRegistryVersion = 1;

struct Bounds {
  std::uint64_t graph = graph::kDefaultMaxVertices;
  // Characteristic polynomials and everything derived from them.
  std::uint64_t spectra = 256;
  // Exponential oracles.
  std::size_t search = invariants::kDefaultSearchBound;
  std::size_t isomorphism = invariants::kIsomorphismBound;
};

struct Options {
  Bounds bounds;
  // Evaluate the three characteristic polynomials and the oracle stage on
  // separate threads.
  bool parallel = true;
};

enum class ClaimStatus { pass, known_discrepancy, fail, skipped };
std::string_view to_string(ClaimStatus s);

using ClaimValue = std::variant<std::monostate, bool, BigInt, Real, std::string>;

struct ClaimSpec {
  std::string_view id;
  std::string_view anchor;
  // A mismatch here is an expected, annotated outcome.
  bool known_discrepancy = false;
};

// Fixed, versioned claim registry in report order.
const std::vector<ClaimSpec>& claim_registry();

struct Claim {
  std::string claim_id;
  std::string paper_anchor;
  ClaimValue predicted;
  ClaimValue computed;
  bool match = false;
  ClaimStatus status = ClaimStatus::skipped;
  std::string note;
};

struct CharpolyCheck {
  spectra::MatrixKind matrix = spectra::MatrixKind::adjacency;
  ExactPoly computed;
  ExactPoly predicted;
  bool equal = false;
};

struct Meta {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  std::uint64_t q = 0;
  BigInt N;
};

struct VerificationReport {
  Meta meta;
  std::vector<Claim> claims;
  // Empty when the graph exceeds the spectra bound.
  std::vector<CharpolyCheck> charpoly_checks;
  // Stage name and wall time in milliseconds; excluded from determinism.
  std::vector<std::pair<std::string, double>> timings;

  const Claim& claim(std::string_view id) const;
  bool has_failures() const;
  bool has_known_discrepancies() const;
};

// Relative tolerance for real-valued claims.
inline constexpr double kRelativeTolerance = 1e-9;
bool values_match(const ClaimValue& predicted, const ClaimValue& computed);

// Throws CapacityError if q^n exceeds bounds.graph; other bounds turn into
// per-claim "skipped" entries.
VerificationReport run_suite(const gf::FieldSpec& spec, std::uint32_t n,
                             const Options& options = {});

enum class ReportFormat { json, markdown };
// Throws std::invalid_argument for unknown names.
ReportFormat report_format_from_string(std::string_view name);

// Deterministic apart from the "timings" block. Reals use 12 significant
// digits.
std::string render_report(const VerificationReport& r, ReportFormat format);
std::string render_report(const VerificationReport& r, std::string_view format);

}  // namespace lindep::verifier
