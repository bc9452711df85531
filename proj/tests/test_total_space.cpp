#include <doctest.h>

#include <random>

#include "flopcheck/errors.hpp"
#include "flopcheck/total_space.hpp"
#include "oracles.hpp"

using namespace flopcheck;

namespace {

HomogBundle hb(std::vector<int> mu, std::vector<int> lambda) {
  return HomogBundle{GLWeight(std::move(mu)), GLWeight(std::move(lambda))};
}

const TotalSpaceModel kCot{GrassmannData(2, 4), TotalSpaceKind::Cotangent};
const TotalSpaceModel kExt{GrassmannData(2, 4), TotalSpaceKind::ExtendedCotangent};

}  // namespace

TEST_CASE("pushforward_graded examples") {
  const GrassmannData g(2, 4);
  for (const auto& m : {kCot, kExt}) {
    const NormalForm k0 = pushforward_graded(0, m);
    CHECK(k0.size() == 1);
    CHECK(k0.multiplicity(HomogBundle::trivial(g)) == 1);
  }
  const NormalForm c1 = pushforward_graded(1, kCot);
  CHECK(c1.size() == 1);
  CHECK(c1.multiplicity(hb({1, 0}, {0, -1})) == 1);
  const NormalForm e1 = pushforward_graded(1, kExt);
  CHECK(e1.size() == 2);
  CHECK(e1.multiplicity(HomogBundle::trivial(g)) == 1);
  CHECK(e1.multiplicity(hb({1, 0}, {0, -1})) == 1);
}

TEST_CASE("pushforward ranks") {
  for (int n = 4; n <= 6; ++n) {
    const int d = 2 * (n - 2);
    const TotalSpaceModel cot{GrassmannData(2, n), TotalSpaceKind::Cotangent};
    const TotalSpaceModel ext{GrassmannData(2, n), TotalSpaceKind::ExtendedCotangent};
    for (int k = 0; k <= 4; ++k) {
      CHECK(pushforward_graded(k, cot).rank() == oracle::choose(d + k - 1, k));
      CHECK(pushforward_graded(k, ext).rank() == oracle::choose(d + k, k));
    }
  }
}

TEST_CASE("graded_hom examples") {
  const GradedExtTable t = graded_hom(BundleExpr::line(0), BundleExpr::line(0), kCot, 1);
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(0, 1) == 15);
  for (int p = 1; p <= 8; ++p) {
    CHECK(t.at(p, 0) == 0);
    CHECK(t.at(p, 1) == 0);
  }

  const GradedExtTable r = graded_hom(BundleExpr::line(2), BundleExpr::line(0), kExt, 2);
  CHECK(r.at(1, 1) == 1);
  for (int p = 0; p <= 8; ++p) CHECK(r.at(p, 0) == 0);
  CHECK(r.exactness() == Exactness::E1Bound);

  for (const auto& m : {kCot, kExt}) {
    CHECK(graded_hom(BundleExpr::line(1), BundleExpr::line(1), m, 3) ==
          graded_hom(BundleExpr::line(0), BundleExpr::line(0), m, 3));
  }
}

TEST_CASE("graded_hom agrees with Bott on each graded piece") {
  // Independent route: Bott on each irreducible of Sym^k T_G (x) b (x) a^v.
  const GrassmannData g(2, 4);
  const GradedExtTable t = graded_hom(BundleExpr::line(0), BundleExpr::line(-1), kCot, 3);
  for (int k = 0; k <= 3; ++k) {
    std::map<int, std::int64_t> expected;
    const NormalForm piece = normalize(BundleExpr::sym(k, BundleExpr::tangent()) * BundleExpr::line(-1), g);
    for (const auto& [b, mult] : piece.terms()) {
      const auto h = bott_cohomology(g, b);
      if (h) expected[h->degree] += mult * h->dim;
    }
    for (int p = 0; p <= 4; ++p) CHECK(t.at(p, k) == (expected.count(p) ? expected[p] : 0));
  }
}

TEST_CASE("extended model decomposes into cotangent pieces") {
  // gr_k of the extended model is the sum of gr_a of the cotangent model.
  const GradedExtTable cot = graded_hom(BundleExpr::line(1), BundleExpr::line(0), kCot, 4);
  const GradedExtTable ext = graded_hom(BundleExpr::line(1), BundleExpr::line(0), kExt, 4);
  for (int p = 0; p <= 4; ++p) {
    for (int k = 0; k <= 4; ++k) {
      std::int64_t sum = 0;
      for (int a = 0; a <= k; ++a) sum += cot.at(p, a);
      CHECK(ext.at(p, k) == sum);
    }
  }
}

TEST_CASE("graded_hom rejects extension nodes") {
  CHECK_THROWS_AS(graded_hom(BundleExpr::extended_cotangent(), BundleExpr::line(0), kExt, 1), Unsupported);
  CHECK_THROWS_AS(graded_hom(BundleExpr::line(0), BundleExpr::sym_extension(1, BundleExpr::extended_tangent()), kExt, 1),
                  Unsupported);
}

TEST_CASE("graded table serialisation") {
  GradedExtTable t(2, Exactness::Exact);
  t.set(0, 0, 1);
  t.set(1, 2, 3);
  t.set(2, 1, 0);
  CHECK(t.max_degree() == 1);
  CHECK(t.euler_char_at(2) == -3);
  const auto j = t.to_json();
  CHECK(j["cutoff"] == 2);
  CHECK(j["exactness"] == "exact");
  CHECK(j["entries"] == nlohmann::json::parse("[[0,0,1],[1,2,3]]"));
}

TEST_CASE("spanning generators") {
  const GrassmannData g(2, 4);
  CHECK(spanning_generator(g, 2, 1) == hb({1, 1}, {0, -2}));
  for (int n = 4; n <= 8; ++n) CHECK(static_cast<std::int64_t>(spanning_generator_indices(n).size()) == oracle::choose(n, 2));
  const auto idx = spanning_generator_indices(4);
  CHECK(idx == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}});
}

TEST_CASE("spanning gram examples") {
  const GrassmannData g(2, 4);
  const GramResult one = spanning_gram(g, {{0, 0}});
  CHECK(one.matrix == std::vector<std::vector<std::int64_t>>{{1}});
  CHECK(one.determinant == 1);

  const GramResult two = spanning_gram(g, {{0, 0}, {0, 1}});
  CHECK(two.matrix[0][0] == 1);
  CHECK(two.matrix[1][1] == 1);
  CHECK(two.matrix[0][1] == 6);
  CHECK(two.matrix[1][0] == 0);

  CHECK_THROWS_AS(spanning_gram(g, {{2, 1}}), DomainError);
  CHECK_THROWS_AS(spanning_gram(g, {{-1, 0}}), DomainError);
}

TEST_CASE("spanning gram is unimodular and matches an independent computation") {
  for (int n = 4; n <= 5; ++n) {
    const GrassmannData g(2, n);
    const auto idx = spanning_generator_indices(n);
    const GramResult gram = spanning_gram(g, idx);
    CHECK((gram.determinant == 1 || gram.determinant == -1));
    CHECK(oracle::permutation_determinant(gram.matrix) == gram.determinant);
    // Entries through normalize of Hom(w_u, w_v) as an expression.
    for (std::size_t u = 0; u < idx.size(); ++u) {
      for (std::size_t v = 0; v < idx.size(); ++v) {
        const auto w = [&](std::pair<int, int> ij) {
          return BundleExpr::sym(ij.first, BundleExpr::dual(BundleExpr::sub())) * BundleExpr::line(ij.second);
        };
        const std::int64_t chi = euler_char(g, normalize(BundleExpr::dual(w(idx[u])) * w(idx[v]), g));
        CHECK(gram.matrix[u][v] == chi);
      }
      CHECK(gram.matrix[u][u] == 1);
    }
  }
}

TEST_CASE("integer determinant agrees with permutation expansion") {
  std::mt19937 rng(37);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const int size = 1 + trial % 6;
    std::vector<std::vector<std::int64_t>> a(size, std::vector<std::int64_t>(size));
    for (auto& row : a) {
      for (auto& x : row) x = entry(rng);
    }
    if (trial % 7 == 0 && size > 1) a[1] = a[0];
    CHECK(integer_determinant(a) == oracle::permutation_determinant(a));
  }
  CHECK(integer_determinant({}) == 1);
}

TEST_CASE("K-classes and the Euler pairing") {
  const GrassmannData g(2, 4);
  KClass a(normalize(BundleExpr::line(1), g));
  KClass o(normalize(BundleExpr::line(0), g));
  CHECK(euler_pairing(g, o, a) == 6);
  CHECK(euler_pairing(g, a, o) == 0);
  KClass diff = a;
  diff.add(o, -1);
  CHECK(diff.rank() == 0);
  CHECK(euler_pairing(g, o, diff) == 5);
  CHECK(a.twisted(-1).terms() == o.terms());
}
