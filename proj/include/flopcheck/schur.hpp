#pragma once

// Partition and GL-weight combinatorics: Littlewood-Richardson products,
// Cauchy decompositions, duals and the Weyl dimension formula.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flopcheck {

/// Weakly decreasing sequence of non-negative integers. Trailing zeros are
/// dropped, so two partitions compare equal iff they have the same nonzero
/// parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  /// Number of nonzero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  /// Sum of parts.
  int size() const;
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Highest weight of an irreducible GL_m representation: a weakly
/// decreasing integer sequence of fixed length m.
class GLWeight {
 public:
  GLWeight() = default;
  explicit GLWeight(std::vector<int> entries);

  /// (c, c, ..., c) of length m.
  static GLWeight constant(int m, int c);
  /// The partition padded with zeros to length m; throws InvalidWeight if
  /// the partition has more than m parts.
  static GLWeight from_partition(const Partition& p, int m);
  /// Lenient parse of "2, 1,0"; also accepts the Unicode minus sign.
  static GLWeight parse(std::string_view text);

  const std::vector<int>& entries() const { return entries_; }
  int length() const { return static_cast<int>(entries_.size()); }
  int operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  GLWeight shifted(int c) const;
  int sum() const;
  /// True when all entries are equal (a power of the determinant).
  bool is_constant() const;

  /// Canonical text form, e.g. "2,1,0".
  std::string to_string() const;

  auto operator<=>(const GLWeight&) const = default;

 private:
  std::vector<int> entries_;
};

/// Direct sum of irreducible GL_m representations with positive
/// multiplicities. Terms iterate in lexicographically descending order.
class IrrepSum {
 public:
  using Terms = std::map<GLWeight, std::int64_t, std::greater<>>;

  void add(const GLWeight& w, std::int64_t multiplicity = 1);

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t multiplicity(const GLWeight& w) const;
  std::int64_t total_dim() const;

  std::string to_string() const;

  bool operator==(const IrrepSum&) const = default;

 private:
  Terms terms_;
};

/// Weyl dimension formula; throws InvalidWeight on non-monotone input and
/// std::overflow_error if the result does not fit in 64 bits.
std::int64_t weyl_dim(const GLWeight& nu);
std::int64_t weyl_dim(const std::vector<int>& nu);

GLWeight dual_weight(const GLWeight& nu);

/// Tensor product decomposition of two GL_m irreducibles via the
/// Littlewood-Richardson rule. Throws LengthMismatch on unequal lengths.
IrrepSum lr_tensor(const GLWeight& lambda, const GLWeight& mu);

/// Littlewood-Richardson coefficient c^nu_{lambda,mu} for partitions.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu,
                            const Partition& nu);

/// Partitions of k with at most max_length parts, lexicographically
/// descending.
std::vector<Partition> partitions_of(int k, int max_length);

/// Sym^k(A (x) B) = sum over kappa of S_kappa A (x) S_kappa B, for
/// rank A = rank_a and rank B = rank_b.
std::vector<std::pair<Partition, Partition>> cauchy_sym(int k, int rank_a, int rank_b);

/// Wedge^k(A (x) B) = sum over kappa of S_kappa A (x) S_kappa' B.
std::vector<std::pair<Partition, Partition>> cauchy_wedge(int k, int rank_a, int rank_b);

/// Binomial coefficient C(n, k) for n >= 0; zero outside 0 <= k <= n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace flopcheck
