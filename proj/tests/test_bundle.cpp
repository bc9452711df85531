#include <doctest.h>

#include <random>
#include <string>

#include "flopcheck/bundle.hpp"
#include "flopcheck/errors.hpp"
#include "oracles.hpp"

using namespace flopcheck;

namespace {

HomogBundle hb(std::vector<int> mu, std::vector<int> lambda) {
  return HomogBundle{GLWeight(std::move(mu)), GLWeight(std::move(lambda))};
}

// Random expression text together with its rank, computed independently
// from closed forms.
struct Sample {
  std::string text;
  std::int64_t rank;
};

class ExprGen {
 public:
  ExprGen(std::mt19937& rng, int r, int n) : rng_(rng), r_(r), q_(n - r) {}

  Sample simple() {
    switch (pick(6)) {
      case 0: return {"S", r_};
      case 1: return {"Q", q_};
      case 2: return {"dual(S)", r_};
      case 3: return {"dual(Q)", q_};
      case 4: {
        const int j = pick(5) - 2;
        return {"O(" + std::to_string(j) + ")", 1};
      }
      default: {
        const Sample s = pick(2) == 0 ? Sample{"S", r_} : Sample{"dual(S)", r_};
        const Sample q = pick(2) == 0 ? Sample{"Q", q_} : Sample{"dual(Q)", q_};
        return {s.text + " * " + q.text + " * O(" + std::to_string(pick(3) - 1) + ")", s.rank * q.rank};
      }
    }
  }

  Sample expr(int depth) {
    if (depth == 0) return leaf();
    switch (pick(6)) {
      case 0: {
        const Sample a = expr(depth - 1);
        const Sample b = expr(depth - 1);
        return {"(" + a.text + ") * (" + b.text + ")", a.rank * b.rank};
      }
      case 1: {
        const Sample a = expr(depth - 1);
        const Sample b = expr(depth - 1);
        return {a.text + " + " + b.text, a.rank + b.rank};
      }
      case 2: {
        const Sample a = expr(depth - 1);
        return {"dual(" + a.text + ")", a.rank};
      }
      case 3: {
        const Sample a = simple_sum();
        const int k = pick(4);
        return {"sym(" + std::to_string(k) + ", " + a.text + ")", oracle::choose(a.rank + k - 1, k)};
      }
      case 4: {
        const Sample a = simple_sum();
        const int k = pick(4);
        return {"wedge(" + std::to_string(k) + ", " + a.text + ")", oracle::choose(a.rank, k)};
      }
      default: return leaf();
    }
  }

 private:
  int pick(int bound) { return std::uniform_int_distribution<int>(0, bound - 1)(rng_); }

  Sample simple_sum() {
    Sample a = simple();
    if (pick(3) == 0) {
      const Sample b = simple();
      a = {a.text + " + " + b.text, a.rank + b.rank};
    }
    return {"(" + a.text + ")", a.rank};
  }

  Sample leaf() {
    switch (pick(5)) {
      case 0: return {"T", r_ * q_};
      case 1: return {"Omega", r_ * q_};
      case 2: {
        const int m = 1 + pick(3);
        return {"triv(" + std::to_string(m) + ")", m};
      }
      case 3: {
        const std::vector<int> w = oracle::random_weight(rng_, r_, -2, 2);
        std::string t = "S{";
        for (std::size_t i = 0; i < w.size(); ++i) t += (i ? "," : "") + std::to_string(w[i]);
        return {t + "}", oracle::dimension(w)};
      }
      default: return simple();
    }
  }

  std::mt19937& rng_;
  int r_;
  int q_;
};

}  // namespace

TEST_CASE("normalize examples") {
  const GrassmannData g(2, 4);
  const NormalForm t = normalize(BundleExpr::tangent(), g);
  CHECK(t.size() == 1);
  CHECK(t.multiplicity(hb({1, 0}, {0, -1})) == 1);
  CHECK(t.rank() == 4);

  const NormalForm s2 = normalize(BundleExpr::sym(2, BundleExpr::dual(BundleExpr::sub()) * BundleExpr::quotient()), g);
  CHECK(s2.size() == 2);
  CHECK(s2.multiplicity(hb({2, 0}, {0, -2})) == 1);
  CHECK(s2.multiplicity(hb({1, 1}, {-1, -1})) == 1);
  CHECK(s2.rank() == 10);

  for (int n = 4; n <= 7; ++n) {
    const GrassmannData gn(2, n);
    for (int i = 0; i <= 3; ++i) {
      for (int j = -2; j <= 2; ++j) {
        const NormalForm w = normalize(BundleExpr::sym(i, BundleExpr::dual(BundleExpr::sub())) * BundleExpr::line(j), gn);
        REQUIRE(w.size() == 1);
        CHECK(w.multiplicity(HomogBundle{GLWeight::constant(n - 2, j), GLWeight({0, -i})}) == 1);
      }
    }
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(BundleExpr::extended_cotangent(), GrassmannData(2, 4)) == 5);
  for (int n = 4; n <= 7; ++n) {
    const GrassmannData g(2, n);
    CHECK(rank(BundleExpr::sym(2, BundleExpr::dual(BundleExpr::sub())), g) == 3);
    CHECK(rank(BundleExpr::wedge(2, BundleExpr::sub()), g) == 1);
  }
}

TEST_CASE("sym_of_graded_extension examples") {
  const GrassmannData g(2, 4);
  const BundleExpr tt = BundleExpr::extended_tangent();
  const NormalForm k0 = sym_of_graded_extension(0, tt, g);
  CHECK(k0.size() == 1);
  CHECK(k0.multiplicity(HomogBundle::trivial(g)) == 1);

  const NormalForm k1 = sym_of_graded_extension(1, tt, g);
  CHECK(k1.size() == 2);
  CHECK(k1.multiplicity(HomogBundle::trivial(g)) == 1);
  CHECK(k1.multiplicity(hb({1, 0}, {0, -1})) == 1);
  CHECK(k1.exactness() == Exactness::E1Bound);

  const NormalForm k2 = sym_of_graded_extension(2, tt, g);
  CHECK(k2.size() == 4);
  CHECK(k2.rank() == oracle::choose(5 + 2 - 1, 2));
  for (int k = 0; k <= 5; ++k) CHECK(sym_of_graded_extension(k, tt, g).rank() == oracle::choose(5 + k - 1, k));

  const BundleExpr three = BundleExpr::extension({BundleExpr::line(0), BundleExpr::sub(), BundleExpr::quotient()});
  CHECK_THROWS_AS(sym_of_graded_extension(2, three, g), Unsupported);
}

TEST_CASE("sym and wedge of extension nodes are rejected by normalize") {
  const GrassmannData g(2, 4);
  CHECK_THROWS_AS(normalize(BundleExpr::sym(2, BundleExpr::extended_tangent()), g), Unsupported);
  CHECK_THROWS_AS(normalize(BundleExpr::wedge(2, BundleExpr::extended_cotangent()), g), Unsupported);
  // symext goes through the graded route.
  CHECK(normalize(BundleExpr::sym_extension(2, BundleExpr::extended_tangent()), g).rank() == 15);
}

TEST_CASE("extension nodes normalize to their associated graded") {
  const GrassmannData g(2, 4);
  const NormalForm e = normalize(BundleExpr::extended_cotangent(), g);
  CHECK(e.rank() == 5);
  CHECK(e.exactness() == Exactness::E1Bound);
  CHECK(e.multiplicity(HomogBundle::trivial(g)) == 1);
}

TEST_CASE("parser") {
  const GrassmannData g(2, 4);
  const BundleExpr e = BundleExpr::parse("sym(2, dual(S) * Q) * O(\xE2\x88\x92" "1)");
  CHECK(normalize(e, g) ==
        normalize(BundleExpr::sym(2, BundleExpr::dual(BundleExpr::sub()) * BundleExpr::quotient()) * BundleExpr::line(-1), g));
  CHECK(BundleExpr::parse(e.to_string()).to_string() == e.to_string());
  CHECK(normalize(BundleExpr::parse("S{1,-1}"), g).multiplicity(hb({0, 0}, {1, -1})) == 1);
  CHECK(normalize(BundleExpr::parse("Q{2,0} + triv(3)"), g).rank() == 6);
  CHECK(rank(BundleExpr::parse("Ttilde"), g) == 5);
  CHECK(rank(BundleExpr::parse("symext(3, Ttilde)"), g) == oracle::choose(7, 3));
  CHECK_THROWS_AS(BundleExpr::parse("sym(2, S"), ParseError);
  CHECK_THROWS_AS(BundleExpr::parse("X"), ParseError);
  CHECK_THROWS_AS(BundleExpr::parse("S *"), ParseError);
  CHECK_THROWS_AS(BundleExpr::parse(""), ParseError);
  CHECK_THROWS_AS(normalize(BundleExpr::parse("S{1,0,0}"), g), LengthMismatch);
}

TEST_CASE("normalize preserves rank on random expressions") {
  std::mt19937 rng(23);
  int checked = 0;
  for (int n : {4, 5, 6}) {
    const GrassmannData g(2, n);
    ExprGen gen(rng, 2, n);
    for (int trial = 0; trial < 150; ++trial) {
      const Sample s = gen.expr(2);
      const BundleExpr e = BundleExpr::parse(s.text);
      const NormalForm nf = normalize(e, g);
      CHECK(nf.rank() == rank(e, g));
      CHECK_MESSAGE(nf.rank() == s.rank, s.text);
      ++checked;
    }
  }
  CHECK(checked == 450);
}

TEST_CASE("dual is an involution on normal forms") {
  std::mt19937 rng(29);
  const GrassmannData g(2, 5);
  ExprGen gen(rng, 2, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const BundleExpr e = BundleExpr::parse(gen.expr(2).text);
    const NormalForm nf = normalize(e, g);
    CHECK(normalize(BundleExpr::dual(BundleExpr::dual(e)), g) == nf);
    CHECK(normalize(BundleExpr::dual(e), g) == nf.dual());
  }
}

TEST_CASE("euler characteristic is additive and matches the summands") {
  std::mt19937 rng(31);
  const GrassmannData g(2, 4);
  ExprGen gen(rng, 2, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const BundleExpr a = BundleExpr::parse(gen.expr(2).text);
    const BundleExpr b = BundleExpr::parse(gen.expr(2).text);
    const std::int64_t ca = euler_char(g, normalize(a, g));
    const std::int64_t cb = euler_char(g, normalize(b, g));
    CHECK(euler_char(g, normalize(a + b, g)) == ca + cb);
    std::int64_t by_hand = 0;
    const NormalForm nf = normalize(a, g);
    for (const auto& [bundle, mult] : nf.terms()) by_hand += mult * euler_char(g, bundle);
    CHECK(by_hand == ca);
  }
}

TEST_CASE("sym and wedge powers of a sum obey the binomial rule") {
  // Sym^k(A + B) = sum_a Sym^a A (x) Sym^{k-a} B; checked on normal forms.
  const GrassmannData g(2, 5);
  const BundleExpr a = BundleExpr::dual(BundleExpr::sub());
  const BundleExpr b = BundleExpr::quotient() * BundleExpr::line(-1);
  for (int k = 0; k <= 4; ++k) {
    std::vector<BundleExpr> sym_terms;
    std::vector<BundleExpr> wedge_terms;
    for (int i = 0; i <= k; ++i) {
      sym_terms.push_back(BundleExpr::sym(i, a) * BundleExpr::sym(k - i, b));
      wedge_terms.push_back(BundleExpr::wedge(i, a) * BundleExpr::wedge(k - i, b));
    }
    CHECK(normalize(BundleExpr::sym(k, a + b), g) == normalize(BundleExpr::sum(sym_terms), g));
    CHECK(normalize(BundleExpr::wedge(k, a + b), g) == normalize(BundleExpr::sum(wedge_terms), g));
  }
}

TEST_CASE("unsupported plethysms are reported") {
  const GrassmannData g(2, 5);
  CHECK_THROWS_AS(normalize(BundleExpr::sym(2, BundleExpr::parse("Q{2,1,0}")), g), Unsupported);
}

TEST_CASE("cohomology of a normal form") {
  const GrassmannData g(2, 4);
  const NormalForm nf = normalize(BundleExpr::parse("dual(Q) * S + O(1)"), g);
  CHECK(cohomology_of_sum(g, nf) == CohomologyTable{{0, 6}, {1, 1}});
  CHECK(euler_char(g, nf) == 5);
}
