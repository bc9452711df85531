#pragma once

// Bott's algorithm for irreducible homogeneous bundles on G(r, n).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "flopcheck/schur.hpp"

namespace flopcheck {

/// The Grassmannian of r-planes in an n-dimensional space, 1 <= r, 2r <= n.
class GrassmannData {
 public:
  GrassmannData(int r, int n);

  int r() const { return r_; }
  int n() const { return n_; }
  int quotient_rank() const { return n_ - r_; }
  int dim() const { return r_ * (n_ - r_); }

  std::string to_string() const;

  auto operator<=>(const GrassmannData&) const = default;

 private:
  int r_;
  int n_;
};

/// Sigma_mu Q (x) Sigma_lambda S, with mu of length n - r and lambda of
/// length r. O(j) = det(Q)^j adds j to every entry of mu.
struct HomogBundle {
  GLWeight mu;
  GLWeight lambda;

  /// The structure sheaf of g.
  static HomogBundle trivial(const GrassmannData& g);
  /// O(j).
  static HomogBundle line(const GrassmannData& g, int j);

  /// Throws LengthMismatch unless the weight lengths fit g.
  void validate(const GrassmannData& g) const;
  std::int64_t rank() const;
  HomogBundle twisted(int j) const;
  HomogBundle dual() const;

  std::string to_string() const;

  auto operator<=>(const HomogBundle&) const = default;
};

struct NonzeroCohomology {
  int degree;
  GLWeight rep;  ///< GL(V) highest weight, length n
  std::int64_t dim;

  bool operator==(const NonzeroCohomology&) const = default;
};

/// nullopt when every cohomology group vanishes.
using CohomologyResult = std::optional<NonzeroCohomology>;

CohomologyResult bott_cohomology(const GrassmannData& g, const HomogBundle& b);

/// b^\vee (x) K_G with K_G = O(-n); its cohomology is dual to that of b,
/// reflected from degree p to dim G - p.
HomogBundle serre_dual_bundle(const GrassmannData& g, const HomogBundle& b);

/// Signed dimension (-1)^degree * dim, or 0.
std::int64_t euler_char(const GrassmannData& g, const HomogBundle& b);

using CohomologyTable = std::map<int, std::int64_t>;

/// Degree -> total dimension over a sum of irreducibles. Degrees with zero
/// total are omitted.
CohomologyTable cohomology_of_sum(const GrassmannData& g,
                                  std::span<const std::pair<HomogBundle, std::int64_t>> terms);

}  // namespace flopcheck
