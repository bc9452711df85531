#pragma once

// Symbolic model of the flop functors Phi, Psi on the spanning generators
// Sym^i S^*_X (x) O_X(j), the r = 1 functors Phi_l, the filtration used to
// compute Phi(Sym^i S^* (x) O(j)), the Eagon-Northcott complex of the rank
// <= 1 locus, and a cross-flop comparison of graded Hom tables.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "flopcheck/lattice.hpp"
#include "flopcheck/total_space.hpp"

namespace flopcheck {

/// Sym^i S^*_X (x) O_X(j) with i, j >= 0 and i + j <= n - 2.
class GeneratorSheaf {
 public:
  GeneratorSheaf(int i, int j, int n);

  int i() const { return i_; }
  int j() const { return j_; }
  int n() const { return n_; }

  BundleExpr bundle() const;
  std::string to_string() const;
  nlohmann::json to_json() const;

  auto operator<=>(const GeneratorSheaf&) const = default;

 private:
  int i_;
  int j_;
  int n_;
};

/// All generators for a given n, ordered by i then j.
std::vector<GeneratorSheaf> spanning_generators(int n);

/// Sym^i S+ (x) O_{X+}(-j).
struct PlusBundle {
  int i;
  int j;
  int n;
  bool operator==(const PlusBundle&) const = default;
};

/// I_{W+} (x) O_{X+}(-n+2).
struct IdealTwist {
  int n;
  bool operator==(const IdealTwist&) const = default;
};

/// E+_i (x) O_{X+}(-n+2+i), where E+_i is the image of
/// Sym^{i-1} S+ (x) E+ -> Sym^i S+. Only its defining sequence is modelled:
/// 0 -> E+_i(i-2) -> Sym^i S+(i-2) -> O_{W+}(-2) -> 0 (n = 4).
struct EPlus {
  int i;
  int n;
  bool operator==(const EPlus&) const = default;
};

using ImageSheaf = std::variant<PlusBundle, IdealTwist, EPlus>;

std::string to_string(const ImageSheaf& s);
/// {"kind": "plus-bundle"|"ideal-twist"|"e-plus", ...}
nlohmann::json to_json(const ImageSheaf& s);
/// Twist of O_{X+} carried by the image.
int plus_twist(const ImageSheaf& s);

ImageSheaf phi_image(const GeneratorSheaf& g);

/// Inverse images under Psi. Plus bundles are inverted for every n; the
/// ideal twist and E+_i only for n = 4. Anything else is Unsupported.
GeneratorSheaf psi_image(const ImageSheaf& s, int n = 4);

struct RoundTripStep {
  GeneratorSheaf source;
  ImageSheaf image;
  std::optional<GeneratorSheaf> back;
  bool ok;
};

struct RoundTripReport {
  int n;
  std::vector<RoundTripStep> steps;
  bool all_ok;
  bool images_distinct;
};

RoundTripReport roundtrip_check(int n = 4);

// ---------------------------------------------------------------------------
// r = 1: standard and Mukai flops

/// One line of the r = 1 table. Phi_l sends O_X(k) to
/// f+_*(O_Y(0,-k)(phi_e E)) and Psi_l sends O_{X+}(-k) to
/// f_*(O_Y(k,0)(psi_e E)); both collapse to line bundles when
/// 0 <= e <= codim(G in X) - 1.
struct R1Entry {
  int k;
  int plus_twist;  ///< -k
  int phi_exceptional;
  int psi_exceptional;
  bool phi_pushforward_clean;
  bool psi_pushforward_clean;
};

struct R1FunctorTable {
  int l;
  int n;
  int blowup_codim;
  std::vector<R1Entry> entries;

  /// Twist of O_{X+} that Phi_l assigns to O_X(k); nullopt outside the table.
  std::optional<int> phi(int k) const;
  /// Twist of O_X that Psi_l assigns to O_{X+}(t); nullopt outside the table.
  std::optional<int> psi(int t) const;
  bool roundtrips() const;
};

/// Table for l - n + 1 <= k <= l. Throws DomainError for n < 2.
R1FunctorTable r1_functor_table(int l, int n);

// ---------------------------------------------------------------------------
// Eagon-Northcott complex

struct ENTerm {
  std::string description;
  HomogBundle bundle;        ///< on G(2, n)
  std::int64_t multiplicity;  ///< rank of the constant factor Wedge^m V^*
  std::int64_t rank;
  int sign;
};

struct ENComplex {
  int n;
  std::vector<ENTerm> terms;  ///< left to right, ending at Wedge^2 S+
  std::string resolved;       ///< O_{W+}(-1)

  std::int64_t signed_rank_sum() const;
  std::vector<std::int64_t> ranks() const;
  /// Alternating K-class of O_{W+}(-1) pulled back from G(2, n).
  KClass k_class() const;
};

/// Throws DomainError for n < 4.
ENComplex eagon_northcott(int n);

struct IdealTwistKClassReport {
  int n;
  KClass w_plus_class;  ///< class used for O_{W+} (x) O(-n+2)
  KClass ideal_class;   ///< [O(-n+2)] - w_plus_class
  std::int64_t rank;
  std::vector<std::int64_t> pairing_row;  ///< chi(w, ideal_class) per generator
  std::vector<std::int64_t> line_row;     ///< chi(w, O(-n+2)) per generator
};

/// K-class bookkeeping for the ideal twist. By default O_{W+} is taken with
/// the class its Eagon-Northcott resolution gives on X0+; pass another
/// class to model O_{W+} on X+ differently.
IdealTwistKClassReport ideal_twist_k_class(int n, const std::optional<KClass>& w_plus_class = std::nullopt);

// ---------------------------------------------------------------------------
// Filtration of f^*Sym^i S^*_X

/// F^{k,l} / F^{k,l+1} = O_{E2}(-i E1' - k E2) (x) f^{+*}O_{X+}(-k+l).
struct FiltrationStep {
  int k;
  int l;
  DivClassY support_twist;  ///< -i E1' - k E2
  int plus_twist;           ///< l - k
  std::string quotient;
};

struct FiltrationLadder {
  int i;
  std::vector<FiltrationStep> steps;
  std::string top;     ///< F^{0,0}
  std::string bottom;  ///< F^{i,0}
};

/// Throws DomainError for i < 1.
FiltrationLadder filtration_ladder(int i);

/// Exponent t of O_{E2}(t E2) on each graded piece after the Phi and Psi
/// twists; the pieces have no direct images when 0 < t <= n - 3 and E1'
/// is trivial on the fibres of E2.
struct LadderVanishing {
  int k;
  int l;
  DivClassY phi_twisted;
  DivClassY psi_twisted;
  bool phi_vanishes;
  bool psi_vanishes;
};

/// Needs i >= 1, j >= 0 and i + j <= n - 3.
std::vector<LadderVanishing> ladder_vanishing(int i, int j, int n);

// ---------------------------------------------------------------------------
// Cross-flop comparison

struct ShiftAnalysis {
  int p;
  bool identical;
  std::optional<int> shift;  ///< smallest |s| with minus(p, k) = plus(p, k + s)
  int overlap;               ///< number of k compared for that shift
};

struct HomComparison {
  GeneratorSheaf g1;
  GeneratorSheaf g2;
  GradedExtTable minus_side;
  GradedExtTable plus_side;
  std::vector<ShiftAnalysis> shifts;

  nlohmann::json to_json() const;
};

/// Graded Hom(g1, g2) on X next to graded Hom(Phi g1, Phi g2) on X+. Both
/// images must be plus bundles (Unsupported otherwise). Nothing is asserted.
HomComparison hom_compare(const GeneratorSheaf& g1, const GeneratorSheaf& g2, int cutoff);

/// Shift search used by hom_compare, exposed for testing. Shifts up to
/// cutoff / 2 in absolute value are tried.
std::vector<ShiftAnalysis> analyse_shifts(const GradedExtTable& minus, const GradedExtTable& plus);

}  // namespace flopcheck
