#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jetorder/matrix.hpp"
#include "jetorder/subspace.hpp"

namespace jetorder {

/// Where a Taylor map is evaluated. Each coordinate is either a fixed rational
/// or left symbolic; all-symbolic is the generic point, all-fixed a rational
/// point, anything in between the generic point of a coordinate stratum.
class EvalPoint {
 public:
  static EvalPoint generic(std::size_t nvars);
  static EvalPoint at(std::vector<Rational> coords);
  static EvalPoint partial(std::vector<std::optional<Rational>> coords);

  std::size_t nvars() const { return coords_.size(); }
  bool is_generic() const;
  bool is_rational() const;
  const std::vector<std::optional<Rational>>& coords() const { return coords_; }
  /// Fixed coordinates; requires is_rational().
  std::vector<Rational> rational_coords() const;

  /// "GENERIC", "(1/2, 3)" or "(?, 0)" for partially symbolic points.
  std::string to_string() const;

  friend bool operator==(const EvalPoint&, const EvalPoint&) = default;

 private:
  std::vector<std::optional<Rational>> coords_;
};

/// Columns indexed by exponents of degree <= order in GradedOrder; row i,
/// column a holds (d^a p_i) / a!.
struct JetMatrix {
  int order = 0;
  std::vector<Exponent> columns;
  EvalPoint point;
  /// Filled when the point is rational.
  std::optional<RationalMatrix> values;
  /// Filled otherwise; fixed coordinates already substituted.
  std::optional<PolynomialMatrix> symbolic;

  std::size_t rows() const;
  std::size_t cols() const { return columns.size(); }
};

/// Symbolic n-jet matrix of V, entries (d^a p_i)/a!.
PolynomialMatrix symbolic_jet_matrix(const SubspaceV& v, int order);

JetMatrix jet_matrix(const SubspaceV& v, int order, const EvalPoint& point);

/// Rank of a jet matrix: exact at rational points, generic_rank otherwise.
RankResult jet_rank(const JetMatrix& jm, const RankOptions& options = {});

struct OrderReport {
  EvalPoint point;
  int n_inj = 0;
  /// -1 when even the constant term is not reached.
  int n_surj = -1;
  std::vector<int> gap_sequence;
  /// Ranks r_0, ..., r_{n_inj} of the Taylor maps.
  std::vector<std::size_t> rank_profile;
  /// Largest j with n_inj > N_inj + j, i.e. n_inj - N_inj - 1.
  int weierstrass_order = -1;
  RankMethod method = RankMethod::Exact;
  bool certified = true;
};

/// Injectivity order of V at the point. Searches n = 0 .. max_degree(V) and
/// fills the rank profile and gap sequence. The Weierstrass order is set
/// relative to N_inj, which is computed here unless supplied.
OrderReport n_inj_at(const SubspaceV& v, const EvalPoint& point,
                     const RankOptions& options = {},
                     std::optional<int> generic_n_inj = std::nullopt);

/// Largest n with the Taylor map surjective at every order <= n; -1 when all
/// of V vanishes at the point.
int n_surj_at(const SubspaceV& v, const EvalPoint& point, const RankOptions& options = {});

struct SurjReport {
  int n_surj = -1;
  RankMethod method = RankMethod::Exact;
  bool certified = true;
};

/// n_surj_at together with how the ranks were obtained.
SurjReport n_surj_report(const SubspaceV& v, const EvalPoint& point,
                         const RankOptions& options = {});

/// Per-point reports against N_inj = n_inj_at(V, generic).
std::vector<OrderReport> weierstrass_scan(const SubspaceV& v,
                                          const std::vector<EvalPoint>& points,
                                          const RankOptions& options = {});

struct MinorOptions {
  /// Upper bound on the number of column subsets examined.
  std::size_t max_minors = 5000;
};

/// Non-zero dim(V) x dim(V) minors of the symbolic jet matrix at order N_inj,
/// deduplicated up to a scalar factor. Their common zero locus in affine space
/// is the set of Weierstrass points. Throws Error(DomainError) when the minor
/// count exceeds options.max_minors.
std::vector<Polynomial> weierstrass_minors(const SubspaceV& v,
                                           const RankOptions& rank_options = {},
                                           const MinorOptions& options = {});

}  // namespace jetorder
