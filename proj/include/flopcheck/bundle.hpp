#pragma once

// Symbolic homogeneous-bundle expressions over S, Q, O(j) and their
// decomposition into irreducible summands.
//
// Expression syntax (whitespace is ignored, '−' may stand for '-'):
//
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := 'S' | 'Q' | 'S{' ints '}' | 'Q{' ints '}'
//           | 'O' | 'O(' int ')' | 'triv(' int ')'
//           | 'T' | 'Omega' | 'Ttilde' | 'Omegatilde'
//           | 'dual(' expr ')' | 'sym(' int ',' expr ')' | 'wedge(' int ',' expr ')'
//           | 'ext(' expr (',' expr)+ ')' | 'symext(' int ',' expr ')'
//           | '(' expr ')'
//
// S{...} and Q{...} are explicit Schur functors of S and Q. ext(...) lists
// the graded pieces of a filtered bundle from sub to quotient; symext(k, e)
// is Sym^k of such an extension, taken through its associated graded.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flopcheck/bott.hpp"

namespace flopcheck {

/// Whether a decomposition is the bundle itself or only the associated
/// graded of a non-split filtration. Cohomology of the latter is an
/// E1-page bound; Euler characteristics are exact either way.
enum class Exactness { Exact, E1Bound };

const char* to_string(Exactness e);

class BundleExpr {
 public:
  enum class Kind {
    Sub,        ///< S
    Quotient,   ///< Q
    Schur,      ///< Sigma_w S or Sigma_w Q
    Line,       ///< O(j)
    Trivial,    ///< O^{m}
    Dual,
    Tensor,
    Sum,
    Sym,
    Wedge,
    Extension,  ///< graded pieces of a filtered bundle
    SymExtension,
  };

  static BundleExpr sub();
  static BundleExpr quotient();
  static BundleExpr schur_sub(std::vector<int> weight);
  static BundleExpr schur_quotient(std::vector<int> weight);
  static BundleExpr line(int j);
  static BundleExpr trivial(int rank);
  static BundleExpr dual(BundleExpr e);
  static BundleExpr tensor(std::vector<BundleExpr> factors);
  static BundleExpr sum(std::vector<BundleExpr> summands);
  static BundleExpr sym(int k, BundleExpr e);
  static BundleExpr wedge(int k, BundleExpr e);
  static BundleExpr extension(std::vector<BundleExpr> pieces);
  static BundleExpr sym_extension(int k, BundleExpr extension);

  /// T_G = S^* (x) Q.
  static BundleExpr tangent();
  /// Omega^1_G = Hom(Q, S) = Q^* (x) S.
  static BundleExpr cotangent();
  /// 0 -> Omega^1 -> Omega~^1 -> O -> 0.
  static BundleExpr extended_cotangent();
  /// Dual of the above: 0 -> O -> T~ -> T_G -> 0.
  static BundleExpr extended_tangent();

  static BundleExpr parse(std::string_view text);

  Kind kind() const;
  int parameter() const;  ///< j, rank or k, depending on kind
  const std::vector<int>& weight() const;
  const std::vector<BundleExpr>& children() const;

  std::string to_string() const;

  friend BundleExpr operator*(BundleExpr a, BundleExpr b);
  friend BundleExpr operator+(BundleExpr a, BundleExpr b);

 private:
  struct Node;
  explicit BundleExpr(std::shared_ptr<const Node> node);
  static BundleExpr make(Kind kind, int parameter, std::vector<int> weight,
                         std::vector<BundleExpr> children);
  std::shared_ptr<const Node> node_;
};

/// A finite sum of irreducible homogeneous bundles with positive
/// multiplicities.
class NormalForm {
 public:
  using Terms = std::map<HomogBundle, std::int64_t>;

  NormalForm() = default;
  explicit NormalForm(Exactness exactness) : exactness_(exactness) {}
  static NormalForm single(const HomogBundle& b, std::int64_t multiplicity = 1);

  void add(const HomogBundle& b, std::int64_t multiplicity = 1);
  void add(const NormalForm& other);
  void mark_e1_bound() { exactness_ = Exactness::E1Bound; }

  const Terms& terms() const { return terms_; }
  Exactness exactness() const { return exactness_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t multiplicity(const HomogBundle& b) const;
  std::int64_t rank() const;

  NormalForm dual() const;
  NormalForm twisted(int j) const;

  std::vector<std::pair<HomogBundle, std::int64_t>> as_list() const;
  std::string to_string() const;

  bool operator==(const NormalForm&) const = default;

 private:
  Terms terms_;
  Exactness exactness_ = Exactness::Exact;
};

NormalForm tensor(const NormalForm& a, const NormalForm& b);

/// Sym^k of an exact normal form. Each summand must factor as a tensor of a
/// Q-part and an S-part that are each a determinant power, possibly times
/// the defining representation or its dual; anything else is Unsupported.
NormalForm sym_power(const NormalForm& nf, int k);
NormalForm wedge_power(const NormalForm& nf, int k);

NormalForm normalize(const BundleExpr& e, const GrassmannData& g);

/// Sym^k of a two-step extension with one trivial line piece, through the
/// associated graded: sum over a <= k of Sym^a of the other piece.
NormalForm sym_of_graded_extension(int k, const BundleExpr& extension, const GrassmannData& g);

std::int64_t rank(const BundleExpr& e, const GrassmannData& g);

CohomologyTable cohomology_of_sum(const GrassmannData& g, const NormalForm& nf);
std::int64_t euler_char(const GrassmannData& g, const NormalForm& nf);

}  // namespace flopcheck
