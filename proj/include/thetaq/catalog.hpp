#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thetaq/expr.hpp"
#include "thetaq/laurent.hpp"

namespace thetaq {

/// lcm of every root-of-unity order in `e`, with a factor 4 folded in when the
/// tree takes real or imaginary parts (those need i in the field).
int required_root_order(const Expr& e);

/// Evaluates `e` over Q(zeta_order) and returns a series exact through total
/// degree `n` (validity exactly n).
///
/// Theta arguments must fold to a single scaled monomial. Internal theta
/// expansions are deepened automatically when negative-degree factors eat
/// into the validity bound. `q` evaluates to the a-slot and may not be mixed
/// with a or b outside a specq(...) node.
LaurentSeries evaluate(const Expr& e, std::int64_t n, int order);

struct Identity {
  std::string name;
  ExprPtr lhs;
  ExprPtr rhs;
  int required_root_order = 1;
  /// Where the identity comes from (Notebook entry or the general transformation).
  std::string reference;
  std::int64_t default_degree = 60;
};

/// Builds an Identity and computes its root order from both sides.
Identity make_identity(std::string name, ExprPtr lhs, ExprPtr rhs, std::string reference,
                       std::int64_t default_degree = 60);
Identity make_identity(std::string name, std::string_view text, std::string reference,
                       std::int64_t default_degree = 60);

enum class Status { verified, failed, error };
std::string_view to_string(Status s);

struct MismatchReport {
  std::string monomial;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string name;
  std::string reference;
  std::int64_t degree = 0;
  int order = 1;
  Status status = Status::error;
  std::optional<MismatchReport> first_mismatch;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  double millis = 0.0;
  std::string error;
  // rendered series, kept for side-by-side output
  std::string lhs_series;
  std::string rhs_series;
};

/// Evaluates both sides at the identity's root order (or `order_override`,
/// which must be a multiple of it) and compares through degree n. Evaluation
/// errors are reported as Status::error, never thrown.
Report verify_identity(const Identity& id, std::int64_t n, std::optional<int> order_override = std::nullopt);

/// The named identities: Notebook entries 30(ii)/(iii), 25(i)/(ii), 7, 9 in
/// both forms, the real/imaginary splits and their a=b=q forms, and the
/// general transformation for m = 2..8.
const std::vector<Identity>& builtin_catalog();

/// lhs f(zeta_m a, zeta_m b), rhs the m-term dissection, generated from the
/// closed form rather than written by hand.
Identity transformation_identity(int m, std::int64_t zeta_exponent = 1);

struct RunSummary {
  std::size_t total = 0;
  std::size_t verified = 0;
  std::size_t failed = 0;
  std::size_t error = 0;
};

RunSummary summarize(const std::vector<Report>& reports);

/// Verifies each identity, fanning out over `jobs` threads; reports come back
/// sorted by name whatever the completion order.
std::vector<Report> run_catalog(const std::vector<Identity>& ids, std::optional<std::int64_t> n,
                                unsigned jobs, std::optional<int> order_override = std::nullopt);

/// Machine-readable report document.
std::string report_json(const Report& r, bool with_series = false);
std::string run_json(const std::vector<Report>& reports, bool with_series = false);

}  // namespace thetaq
