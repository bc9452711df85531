#pragma once

// Graded cohomology on the total spaces of Omega^1_G and its extension
// Omega~^1_G, computed by pushing forward to G and splitting by the
// C^*-grading of pi_* O.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "flopcheck/bundle.hpp"

namespace flopcheck {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDefaultCutoff = 10;

enum class TotalSpaceKind {
  Cotangent,          ///< X0 = Tot(Omega^1_G)
  ExtendedCotangent,  ///< X = Tot(Omega~^1_G)
};

/// Which side of the flop a model sits on. G+ has the same invariants as G,
/// so the side only labels output.
enum class FlopSide { Minus, Plus };

const char* to_string(TotalSpaceKind kind);
const char* to_string(FlopSide side);

struct TotalSpaceModel {
  GrassmannData base;
  TotalSpaceKind kind;
  FlopSide side = FlopSide::Minus;
};

/// dim H^p of the weight-k piece, for k <= cutoff. Missing cells are zero;
/// nothing is claimed beyond the cutoff.
class GradedExtTable {
 public:
  GradedExtTable(int cutoff, Exactness exactness) : cutoff_(cutoff), exactness_(exactness) {}

  void set(int p, int k, std::int64_t dim);
  std::int64_t at(int p, int k) const;

  int cutoff() const { return cutoff_; }
  Exactness exactness() const { return exactness_; }
  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }
  /// Largest p with a nonzero entry, or -1.
  int max_degree() const;
  /// (-1)^p-weighted sum over p at fixed k.
  std::int64_t euler_char_at(int k) const;

  /// {"cutoff": k, "entries": [[p, k, dim], ...], "exactness": "exact"|"e1-bound"}
  nlohmann::json to_json() const;
  std::string to_text() const;

  bool operator==(const GradedExtTable&) const = default;

 private:
  int cutoff_;
  Exactness exactness_;
  std::map<std::pair<int, int>, std::int64_t> entries_;
};

/// gr_k pi_* O: Sym^k T_G for X0, and the associated graded of Sym^k T~_G
/// (the sum of Sym^a T_G over a <= k) for X.
NormalForm pushforward_graded(int k, const TotalSpaceModel& m);

/// Graded Hom^p(pi^* a, pi^* b) on the total space, k = 0..cutoff.
/// a and b must be split homogeneous bundles (no ext/symext nodes).
GradedExtTable graded_hom(const BundleExpr& a, const BundleExpr& b, const TotalSpaceModel& m,
                          int cutoff = kDefaultCutoff);

/// Signed combination of irreducible homogeneous bundles (a class in the
/// Grothendieck group of G).
class KClass {
 public:
  KClass() = default;
  explicit KClass(const NormalForm& nf);

  void add(const HomogBundle& b, std::int64_t coefficient);
  void add(const KClass& other, std::int64_t scale = 1);

  const std::map<HomogBundle, std::int64_t>& terms() const { return terms_; }
  std::int64_t rank() const;
  KClass twisted(int j) const;
  std::string to_string() const;

 private:
  std::map<HomogBundle, std::int64_t> terms_;
};

/// Euler pairing chi(A, B) = sum (-1)^p dim Ext^p_G(A, B).
std::int64_t euler_pairing(const GrassmannData& g, const KClass& a, const KClass& b);

/// Sym^i S^* (x) O(j).
HomogBundle spanning_generator(const GrassmannData& g, int i, int j);

/// All (i, j) with i, j >= 0 and i + j <= n - 2, ordered by i then j.
std::vector<std::pair<int, int>> spanning_generator_indices(int n);

struct GramResult {
  std::vector<std::vector<std::int64_t>> matrix;
  BigInt determinant;
};

/// Gram matrix chi(w_u, w_v) of the generators w = Sym^i S^* (x) O(j), and
/// its determinant. Throws DomainError for indices outside i, j >= 0,
/// i + j <= n - 2.
GramResult spanning_gram(const GrassmannData& g, const std::vector<std::pair<int, int>>& gens);

/// Exact determinant by fraction-free Gaussian elimination.
BigInt integer_determinant(const std::vector<std::vector<std::int64_t>>& matrix);

}  // namespace flopcheck
