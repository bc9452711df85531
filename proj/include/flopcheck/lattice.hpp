#pragma once

// Relative divisor and curve lattices of the two-step blow-up Y -> X used
// to resolve the flop when r = 2.
//
// Divisors are written in the basis {f^*O_X(1), E1', E2}; curves in the
// basis {l1', l2}, which spans the relative cone of curves. The pull-back
// f^*O_X(1) is trivial on both curves since they are f-contracted.

#include <cstdint>
#include <string>
#include <utility>

#include <boost/rational.hpp>

namespace flopcheck {

// Compare against Rational values, not integer literals: mixed comparisons
// recurse forever with Boost 1.74 under C++20 operator rewriting.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);

struct DivClassY {
  Rational pullback;  ///< coefficient of f^*O_X(1)
  Rational e1;        ///< coefficient of E1'
  Rational e2;        ///< coefficient of E2

  static DivClassY hyperplane() { return {1, 0, 0}; }
  static DivClassY exceptional1() { return {0, 1, 0}; }
  static DivClassY exceptional2() { return {0, 0, 1}; }
  /// f^{+*}O_{X+}(1) = -f^*O_X(1) - 2E1' - E2, from comparing determinants
  /// of f^*S^*_X and f^{+*}S^+.
  static DivClassY plus_hyperplane() { return {-1, -2, -1}; }

  DivClassY operator+(const DivClassY& o) const { return {pullback + o.pullback, e1 + o.e1, e2 + o.e2}; }
  DivClassY operator-(const DivClassY& o) const { return {pullback - o.pullback, e1 - o.e1, e2 - o.e2}; }
  DivClassY operator-() const { return {-pullback, -e1, -e2}; }
  friend DivClassY operator*(const Rational& c, const DivClassY& d) {
    return {c * d.pullback, c * d.e1, c * d.e2};
  }
  bool operator==(const DivClassY&) const = default;

  std::string to_string() const;
};

/// a l1' + b l2, with a, b >= 0.
struct CurveClassY {
  Rational a;
  Rational b;

  CurveClassY(Rational a_, Rational b_);
  static CurveClassY l1() { return {1, 0}; }
  static CurveClassY l2() { return {0, 1}; }

  bool operator==(const CurveClassY&) const = default;
  std::string to_string() const;
};

/// Intersection number, bilinear in both arguments:
/// (E1'.l1') = -1, (E1'.l2) = 0, (E2.l1') = 2, (E2.l2) = -1.
Rational pair(const DivClassY& d, const CurveClassY& c);

/// Non-negative on both generators of the relative cone of curves.
bool relative_nef(const DivClassY& d);

/// Coefficients of E1' and E2 are non-negative and the class has no
/// pull-back part.
bool effective_exceptional(const DivClassY& d);

/// Discrepancies (a1, a2) in K_Y = f^*K_X + a1 E1' + a2 E2 for r = 2.
/// Throws DomainError for n < 4.
std::pair<std::int64_t, std::int64_t> canonical_coefficients(int n);

/// The same discrepancies recomputed as codimension - 1 of each blow-up
/// centre, from the dimension formulas.
std::pair<std::int64_t, std::int64_t> canonical_coefficients_from_codimensions(int n);

/// K_{Y/X} as a divisor class.
DivClassY relative_canonical(int n);

struct FlopDimensions {
  int r;
  int n;
  std::int64_t dim_G;
  std::int64_t dim_X0;
  std::int64_t dim_X;
  std::int64_t dim_W;

  bool operator==(const FlopDimensions&) const = default;
};

/// Throws DomainError unless 1 <= r and 2r <= n.
FlopDimensions flop_dimensions(int r, int n);

struct PicardRelationReport {
  DivClassY plus_hyperplane;
  Rational with_l1;  ///< pairing of f^{+*}O_{X+}(1) with l1'
  Rational with_l2;  ///< pairing of f^{+*}O_{X+}(1) with l2
  bool l1_contracted_by_plus;
};

PicardRelationReport picard_relation_check();

}  // namespace flopcheck
