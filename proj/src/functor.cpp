#include "flopcheck/functor.hpp"

#include <algorithm>
#include <set>

#include "flopcheck/errors.hpp"

namespace flopcheck {

namespace {

std::string twist_suffix(const char* space, int t) {
  if (t == 0) return {};
  return " ⊗ O_{" + std::string(space) + "}(" + std::to_string(t) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Generators and images

GeneratorSheaf::GeneratorSheaf(int i, int j, int n) : i_(i), j_(j), n_(n) {
  if (i < 0 || j < 0 || i + j > n - 2) {
    throw DomainError("generator Sym^" + std::to_string(i) + "S^* ⊗ O(" + std::to_string(j) +
                      ") is outside i, j >= 0, i + j <= n - 2 for n = " + std::to_string(n));
  }
}

BundleExpr GeneratorSheaf::bundle() const {
  return BundleExpr::sym(i_, BundleExpr::dual(BundleExpr::sub())) * BundleExpr::line(j_);
}

std::string GeneratorSheaf::to_string() const {
  std::string out = i_ == 0 ? "O_X" : (i_ == 1 ? "S^*_X" : "Sym^" + std::to_string(i_) + "S^*_X");
  if (j_ != 0) out += (i_ == 0 ? "(" + std::to_string(j_) + ")" : twist_suffix("X", j_));
  return out;
}

nlohmann::json GeneratorSheaf::to_json() const {
  return {{"i", std::to_string(i_)}, {"j", std::to_string(j_)}, {"n", std::to_string(n_)}};
}

std::vector<GeneratorSheaf> spanning_generators(int n) {
  std::vector<GeneratorSheaf> out;
  for (const auto& [i, j] : spanning_generator_indices(n)) out.emplace_back(i, j, n);
  return out;
}

std::string to_string(const ImageSheaf& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, PlusBundle>) {
          std::string out = v.i == 0 ? "O_{X+}" : (v.i == 1 ? "S+" : "Sym^" + std::to_string(v.i) + "S+");
          if (v.i == 0) return out + "(" + std::to_string(-v.j) + ")";
          return out + twist_suffix("X+", -v.j);
        } else if constexpr (std::is_same_v<V, IdealTwist>) {
          return "I_{W+}" + twist_suffix("X+", -v.n + 2);
        } else {
          return "E+_" + std::to_string(v.i) + " ⊗ O_{X+}(" + std::to_string(-v.n + 2 + v.i) + ")";
        }
      },
      s);
}

nlohmann::json to_json(const ImageSheaf& s) {
  return std::visit(
      [&](const auto& v) -> nlohmann::json {
        using V = std::decay_t<decltype(v)>;
        nlohmann::json out{{"n", std::to_string(v.n)}, {"text", to_string(s)},
                           {"twist", std::to_string(plus_twist(s))}};
        if constexpr (std::is_same_v<V, PlusBundle>) {
          out["kind"] = "plus-bundle";
          out["i"] = std::to_string(v.i);
          out["j"] = std::to_string(v.j);
        } else if constexpr (std::is_same_v<V, IdealTwist>) {
          out["kind"] = "ideal-twist";
        } else {
          out["kind"] = "e-plus";
          out["i"] = std::to_string(v.i);
        }
        return out;
      },
      s);
}

int plus_twist(const ImageSheaf& s) {
  return std::visit(
      [](const auto& v) -> int {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, PlusBundle>) {
          return -v.j;
        } else if constexpr (std::is_same_v<V, IdealTwist>) {
          return -v.n + 2;
        } else {
          return -v.n + 2 + v.i;
        }
      },
      s);
}

ImageSheaf phi_image(const GeneratorSheaf& g) {
  const int n = g.n();
  if (g.i() == 0) {
    if (g.j() <= n - 3) return PlusBundle{0, g.j(), n};
    return IdealTwist{n};
  }
  if (g.i() + g.j() <= n - 3) return PlusBundle{g.i(), g.j(), n};
  return EPlus{g.i(), n};
}

GeneratorSheaf psi_image(const ImageSheaf& s, int n) {
  return std::visit(
      [n](const auto& v) -> GeneratorSheaf {
        using V = std::decay_t<decltype(v)>;
        if (v.n != n) {
          throw DomainError("image sheaf for n = " + std::to_string(v.n) +
                            " passed to psi_image with n = " + std::to_string(n));
        }
        if constexpr (std::is_same_v<V, PlusBundle>) {
          if (v.i < 0 || v.j < 0 || v.i + v.j > n - 3) {
            throw Unsupported("Psi of Sym^iS+ ⊗ O(-j) is only known for i + j <= n - 3");
          }
          return GeneratorSheaf(v.i, v.j, n);
        } else if constexpr (std::is_same_v<V, IdealTwist>) {
          if (n != 4) throw Unsupported("Psi of the ideal twist is only known for n = 4");
          return GeneratorSheaf(0, 2, 4);
        } else {
          if (n != 4) throw Unsupported("Psi of E+_i is only known for n = 4");
          if (v.i < 1 || v.i > 2) throw Unsupported("Psi of E+_i needs 0 < i <= 2");
          return GeneratorSheaf(v.i, 2 - v.i, 4);
        }
      },
      s);
}

RoundTripReport roundtrip_check(int n) {
  RoundTripReport report{n, {}, true, true};
  std::set<std::string> seen;
  for (const auto& g : spanning_generators(n)) {
    const ImageSheaf image = phi_image(g);
    if (!seen.insert(to_json(image).dump()).second) report.images_distinct = false;
    std::optional<GeneratorSheaf> back;
    try {
      back = psi_image(image, n);
    } catch (const Unsupported&) {
      back.reset();
    }
    const bool ok = back && *back == g;
    report.all_ok = report.all_ok && ok;
    report.steps.push_back({g, image, back, ok});
  }
  return report;
}

// ---------------------------------------------------------------------------
// r = 1

std::optional<int> R1FunctorTable::phi(int k) const {
  for (const auto& e : entries) {
    if (e.k == k) return e.plus_twist;
  }
  return std::nullopt;
}

std::optional<int> R1FunctorTable::psi(int t) const {
  for (const auto& e : entries) {
    if (e.plus_twist == t) return e.k;
  }
  return std::nullopt;
}

bool R1FunctorTable::roundtrips() const {
  return std::all_of(entries.begin(), entries.end(), [this](const R1Entry& e) {
    const auto image = phi(e.k);
    return image && psi(*image) == e.k && e.phi_pushforward_clean && e.psi_pushforward_clean;
  });
}

R1FunctorTable r1_functor_table(int l, int n) {
  const FlopDimensions dims = flop_dimensions(1, n);
  const int codim = static_cast<int>(dims.dim_X - dims.dim_G);
  // f^*O_X(1) = f^{+*}O_{X+}(-1) ⊗ O_Y(-E), so O_Y(k,0) = O_Y(0,-k)(-kE).
  constexpr int kRelation = -1;
  R1FunctorTable table{l, n, codim, {}};
  for (int k = l - n + 1; k <= l; ++k) {
    const int phi_e = l + kRelation * k;
    const int psi_e = (n - 1 - l) - kRelation * k;
    table.entries.push_back({k, -k, phi_e, psi_e, phi_e >= 0 && phi_e <= codim - 1,
                             psi_e >= 0 && psi_e <= codim - 1});
  }
  return table;
}

// ---------------------------------------------------------------------------
// Eagon-Northcott

std::int64_t ENComplex::signed_rank_sum() const {
  std::int64_t total = 0;
  for (const auto& t : terms) total += t.sign * t.rank;
  return total;
}

std::vector<std::int64_t> ENComplex::ranks() const {
  std::vector<std::int64_t> out;
  for (const auto& t : terms) out.push_back(t.rank);
  return out;
}

KClass ENComplex::k_class() const {
  KClass out;
  for (const auto& t : terms) out.add(t.bundle, t.sign * t.multiplicity);
  return out;
}

ENComplex eagon_northcott(int n) {
  if (n < 4) throw DomainError("eagon_northcott needs n >= 4, got " + std::to_string(n));
  const GrassmannData g(2, n);
  ENComplex complex{n, {}, "O_{W+}(-1)"};
  // Position counted from the right end: Wedge^2 S+ sits in position 0.
  auto sign_at = [](int position) { return position % 2 == 0 ? 1 : -1; };
  for (int k = n - 2; k >= 1; --k) {
    HomogBundle b{GLWeight::constant(n - 2, 0), GLWeight({0, -k})};
    const std::int64_t mult = binomial(n, k + 2);
    std::string desc = (k == 1 ? std::string("(S+)^*") : "(Sym^" + std::to_string(k) + " S+)^*") +
                       " ⊗ Λ^" + std::to_string(k + 2) + " V^*";
    complex.terms.push_back({desc, b, mult, mult * b.rank(), sign_at(k + 1)});
  }
  const std::int64_t wedge2 = binomial(n, 2);
  complex.terms.push_back({"O ⊗ Λ^2 V^*", HomogBundle::trivial(g), wedge2, wedge2, sign_at(1)});
  HomogBundle top{GLWeight::constant(n - 2, 0), GLWeight({1, 1})};
  complex.terms.push_back({"Λ^2 S+", top, 1, top.rank(), sign_at(0)});
  return complex;
}

IdealTwistKClassReport ideal_twist_k_class(int n, const std::optional<KClass>& w_plus_class) {
  const GrassmannData g(2, n);
  IdealTwistKClassReport report;
  report.n = n;
  // O_{W+}(-1) ⊗ O(-n+3) = O_{W+} ⊗ O(-n+2).
  report.w_plus_class = w_plus_class ? *w_plus_class : eagon_northcott(n).k_class().twisted(-n + 3);
  KClass line;
  line.add(HomogBundle::line(g, -n + 2), 1);
  report.ideal_class = line;
  report.ideal_class.add(report.w_plus_class, -1);
  report.rank = report.ideal_class.rank();
  for (const auto& [i, j] : spanning_generator_indices(n)) {
    KClass w;
    w.add(spanning_generator(g, i, j), 1);
    report.pairing_row.push_back(euler_pairing(g, w, report.ideal_class));
    report.line_row.push_back(euler_pairing(g, w, line));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Filtration ladder

FiltrationLadder filtration_ladder(int i) {
  if (i < 1) throw DomainError("filtration_ladder needs i >= 1");
  FiltrationLadder ladder{i, {}, "f^*Sym^" + std::to_string(i) + "S^*_X", {}};
  for (int k = 0; k < i; ++k) {
    for (int l = 0; l <= k; ++l) {
      DivClassY twist{0, -i, -k};
      std::string quotient = "O_{E2}(" + twist.to_string() + ")";
      if (l - k != 0) quotient += " ⊗ f+^*O_{X+}(" + std::to_string(l - k) + ")";
      ladder.steps.push_back({k, l, twist, l - k, std::move(quotient)});
    }
  }
  ladder.bottom = "f+^*Sym^" + std::to_string(i) + "S+(" + DivClassY{0, -i, -i}.to_string() + ")";
  return ladder;
}

std::vector<LadderVanishing> ladder_vanishing(int i, int j, int n) {
  if (i < 1 || j < 0 || i + j > n - 3) {
    throw DomainError("ladder_vanishing needs i >= 1, j >= 0 and i + j <= n - 3");
  }
  const DivClassY phi_twist{0, 2 * n - 5 - 2 * j, n - 3 - j};
  const DivClassY psi_twist{0, i + 2 * j + 1, i + j};
  auto vanishes = [n](const DivClassY& d) {
    // E1' has degree 0 on the fibres l2 of E2 -> W', so only the E2
    // coefficient matters there.
    const bool e1_trivial_on_fibre = pair({0, d.e1, 0}, CurveClassY::l2()) == Rational(0);
    return e1_trivial_on_fibre && d.e2 > Rational(0) && d.e2 <= Rational(n - 3);
  };
  std::vector<LadderVanishing> out;
  for (const auto& step : filtration_ladder(i).steps) {
    const DivClassY phi_d = step.support_twist + phi_twist;
    const DivClassY psi_d = step.support_twist + psi_twist;
    out.push_back({step.k, step.l, phi_d, psi_d, vanishes(phi_d), vanishes(psi_d)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// hom_compare

std::vector<ShiftAnalysis> analyse_shifts(const GradedExtTable& minus, const GradedExtTable& plus) {
  const int cutoff = std::min(minus.cutoff(), plus.cutoff());
  const int top = std::max(minus.max_degree(), plus.max_degree());
  std::vector<ShiftAnalysis> out;
  for (int p = 0; p <= top; ++p) {
    ShiftAnalysis a{p, true, std::nullopt, 0};
    for (int k = 0; k <= cutoff; ++k) {
      if (minus.at(p, k) != plus.at(p, k)) a.identical = false;
    }
    for (int mag = 0; mag <= cutoff / 2 && !a.shift; ++mag) {
      for (int s : {mag, -mag}) {
        const int lo = std::max(0, -s);
        const int hi = std::min(cutoff, cutoff - s);
        bool match = true;
        for (int k = lo; k <= hi && match; ++k) match = minus.at(p, k) == plus.at(p, k + s);
        if (match) {
          a.shift = s;
          a.overlap = hi - lo + 1;
          break;
        }
        if (mag == 0) break;
      }
    }
    out.push_back(a);
  }
  return out;
}

HomComparison hom_compare(const GeneratorSheaf& g1, const GeneratorSheaf& g2, int cutoff) {
  if (g1.n() != g2.n()) throw DomainError("hom_compare: generators for different n");
  const ImageSheaf im1 = phi_image(g1);
  const ImageSheaf im2 = phi_image(g2);
  const auto* p1 = std::get_if<PlusBundle>(&im1);
  const auto* p2 = std::get_if<PlusBundle>(&im2);
  if (!p1 || !p2) {
    throw Unsupported("hom_compare needs both images to be plus bundles, got " + to_string(im1) +
                      " and " + to_string(im2));
  }
  const GrassmannData base(2, g1.n());
  const TotalSpaceModel minus{base, TotalSpaceKind::ExtendedCotangent, FlopSide::Minus};
  const TotalSpaceModel plus{base, TotalSpaceKind::ExtendedCotangent, FlopSide::Plus};
  // On G+ the image Sym^i S+ ⊗ O(-j) is built from the tautological
  // subbundle of G+, which the engine models as S on G(2, n).
  auto plus_expr = [](const PlusBundle& b) {
    return BundleExpr::sym(b.i, BundleExpr::sub()) * BundleExpr::line(-b.j);
  };
  HomComparison out{g1,
                    g2,
                    graded_hom(g1.bundle(), g2.bundle(), minus, cutoff),
                    graded_hom(plus_expr(*p1), plus_expr(*p2), plus, cutoff),
                    {}};
  out.shifts = analyse_shifts(out.minus_side, out.plus_side);
  return out;
}

nlohmann::json HomComparison::to_json() const {
  nlohmann::json shift_list = nlohmann::json::array();
  for (const auto& s : shifts) {
    shift_list.push_back({{"p", std::to_string(s.p)},
                          {"identical", s.identical},
                          {"shift", s.shift ? nlohmann::json(std::to_string(*s.shift)) : nlohmann::json()},
                          {"overlap", std::to_string(s.overlap)}});
  }
  return {{"g1", g1.to_json()},
          {"g2", g2.to_json()},
          {"minus", minus_side.to_json()},
          {"plus", plus_side.to_json()},
          {"shifts", shift_list}};
}

}  // namespace flopcheck
