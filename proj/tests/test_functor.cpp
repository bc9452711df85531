#include <doctest.h>

#include <set>

#include "flopcheck/errors.hpp"
#include "flopcheck/functor.hpp"
#include "oracles.hpp"

using namespace flopcheck;

TEST_CASE("generators are validated") {
  CHECK(GeneratorSheaf(1, 1, 4).to_string() == "S^*_X ⊗ O_{X}(1)");
  CHECK(GeneratorSheaf(0, 2, 4).to_string() == "O_X(2)");
  CHECK_THROWS_AS(GeneratorSheaf(2, 1, 4), DomainError);
  CHECK_THROWS_AS(GeneratorSheaf(-1, 0, 4), DomainError);
  for (int n = 4; n <= 8; ++n) CHECK(static_cast<std::int64_t>(spanning_generators(n).size()) == oracle::choose(n, 2));
}

TEST_CASE("phi_image case split") {
  CHECK(phi_image(GeneratorSheaf(0, 1, 4)) == ImageSheaf{PlusBundle{0, 1, 4}});
  CHECK(to_string(phi_image(GeneratorSheaf(0, 1, 4))) == "O_{X+}(-1)");
  CHECK(phi_image(GeneratorSheaf(0, 2, 4)) == ImageSheaf{IdealTwist{4}});
  CHECK(to_string(phi_image(GeneratorSheaf(0, 2, 4))) == "I_{W+} ⊗ O_{X+}(-2)");
  CHECK(phi_image(GeneratorSheaf(2, 0, 4)) == ImageSheaf{EPlus{2, 4}});
  CHECK(to_string(phi_image(GeneratorSheaf(2, 0, 4))) == "E+_2 ⊗ O_{X+}(0)");
  for (int n = 4; n <= 8; ++n) {
    for (const auto& g : spanning_generators(n)) {
      const ImageSheaf im = phi_image(g);
      if (g.i() + g.j() <= n - 3) {
        CHECK(im == ImageSheaf{PlusBundle{g.i(), g.j(), n}});
      } else if (g.i() == 0) {
        CHECK(im == ImageSheaf{IdealTwist{n}});
      } else {
        CHECK(im == ImageSheaf{EPlus{g.i(), n}});
      }
    }
  }
}

TEST_CASE("psi_image examples") {
  CHECK(psi_image(PlusBundle{0, 1, 4}) == GeneratorSheaf(0, 1, 4));
  CHECK(psi_image(IdealTwist{4}) == GeneratorSheaf(0, 2, 4));
  CHECK(psi_image(EPlus{1, 4}) == GeneratorSheaf(1, 1, 4));
  CHECK(psi_image(PlusBundle{1, 2, 6}, 6) == GeneratorSheaf(1, 2, 6));
  CHECK_THROWS_AS(psi_image(IdealTwist{5}, 5), Unsupported);
  CHECK_THROWS_AS(psi_image(EPlus{1, 5}, 5), Unsupported);
}

TEST_CASE("round trip at n = 4") {
  const RoundTripReport rt = roundtrip_check(4);
  CHECK(rt.steps.size() == 6);
  CHECK(rt.all_ok);
  CHECK(rt.images_distinct);
  std::set<std::string> seen;
  for (const auto& s : rt.steps) {
    REQUIRE(s.back.has_value());
    CHECK(*s.back == s.source);
    seen.insert(to_string(s.image));
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("r = 1 functor table") {
  const R1FunctorTable t = r1_functor_table(0, 2);
  REQUIRE(t.entries.size() == 2);
  CHECK(t.phi(-1) == 1);
  CHECK(t.phi(0) == 0);
  CHECK_FALSE(t.phi(1).has_value());
  CHECK(t.roundtrips());

  const R1FunctorTable t3 = r1_functor_table(3, 4);
  REQUIRE(t3.entries.size() == 4);
  for (int k = 0; k <= 3; ++k) CHECK(t3.phi(k) == -k);

  for (int n = 2; n <= 6; ++n) {
    for (int l = -5; l <= 5; ++l) {
      const R1FunctorTable tab = r1_functor_table(l, n);
      CHECK(tab.blowup_codim == n);
      CHECK(static_cast<int>(tab.entries.size()) == n);
      CHECK(tab.roundtrips());
      for (const auto& e : tab.entries) {
        CHECK(e.k >= l - n + 1);
        CHECK(e.k <= l);
        CHECK(e.phi_pushforward_clean);
        CHECK(e.psi_pushforward_clean);
        CHECK(tab.psi(*tab.phi(e.k)) == e.k);
      }
      // Just outside the window the exceptional twist leaves [0, codim - 1].
      CHECK_FALSE(tab.phi(l + 1).has_value());
      CHECK_FALSE(tab.phi(l - n).has_value());
    }
  }
  CHECK_THROWS_AS(r1_functor_table(0, 1), DomainError);
}

TEST_CASE("Eagon-Northcott ranks") {
  CHECK(eagon_northcott(4).ranks() == std::vector<std::int64_t>{3, 8, 6, 1});
  CHECK(eagon_northcott(5).ranks() == std::vector<std::int64_t>{4, 15, 20, 10, 1});
  for (int n = 4; n <= 10; ++n) {
    const ENComplex en = eagon_northcott(n);
    std::vector<std::int64_t> expected;
    for (int k = n - 2; k >= 1; --k) expected.push_back((k + 1) * oracle::choose(n, k + 2));
    expected.push_back(oracle::choose(n, 2));
    expected.push_back(1);
    CHECK(en.ranks() == expected);
    CHECK(en.terms.size() == static_cast<std::size_t>(n));
    CHECK(en.signed_rank_sum() == 0);
    CHECK(en.terms.back().sign == 1);
    for (std::size_t t = 0; t + 1 < en.terms.size(); ++t) CHECK(en.terms[t].sign == -en.terms[t + 1].sign);
    CHECK(en.k_class().rank() == 0);
  }
  CHECK_THROWS_AS(eagon_northcott(3), DomainError);
}

TEST_CASE("ideal twist K-class") {
  const auto rep = ideal_twist_k_class(4);
  CHECK(rep.rank == 1);
  CHECK(rep.pairing_row.size() == 6);
  CHECK(rep.line_row.size() == 6);
  // A zero class for O_{W+} leaves the line bundle.
  const auto trivial = ideal_twist_k_class(4, KClass());
  CHECK(trivial.pairing_row == trivial.line_row);
}

TEST_CASE("filtration ladder") {
  const FiltrationLadder l1 = filtration_ladder(1);
  REQUIRE(l1.steps.size() == 1);
  CHECK(l1.steps[0].k == 0);
  CHECK(l1.steps[0].l == 0);
  CHECK(l1.steps[0].quotient == "O_{E2}(-E1')");

  const FiltrationLadder l2 = filtration_ladder(2);
  REQUIRE(l2.steps.size() == 3);
  CHECK(std::pair{l2.steps[0].k, l2.steps[0].l} == std::pair{0, 0});
  CHECK(std::pair{l2.steps[1].k, l2.steps[1].l} == std::pair{1, 0});
  CHECK(std::pair{l2.steps[2].k, l2.steps[2].l} == std::pair{1, 1});
  CHECK(l2.steps[1].quotient == "O_{E2}(-2E1'-E2) ⊗ f+^*O_{X+}(-1)");

  for (int i = 1; i <= 6; ++i) {
    const FiltrationLadder ladder = filtration_ladder(i);
    CHECK(static_cast<int>(ladder.steps.size()) == i * (i + 1) / 2);
    int prev_k = 0;
    int prev_l = -1;
    for (const auto& s : ladder.steps) {
      CHECK(0 <= s.l);
      CHECK(s.l <= s.k);
      CHECK(s.k < i);
      CHECK((s.k > prev_k || (s.k == prev_k && s.l > prev_l)));
      prev_k = s.k;
      prev_l = s.l;
      CHECK(s.support_twist == DivClassY{0, -i, -s.k});
      CHECK(s.plus_twist == s.l - s.k);
    }
  }
  CHECK_THROWS_AS(filtration_ladder(0), DomainError);
}

TEST_CASE("graded pieces of the ladder have no direct images") {
  for (int n = 4; n <= 9; ++n) {
    for (int i = 1; i <= n - 3; ++i) {
      for (int j = 0; i + j <= n - 3; ++j) {
        const auto pieces = ladder_vanishing(i, j, n);
        CHECK(static_cast<int>(pieces.size()) == i * (i + 1) / 2);
        for (const auto& v : pieces) {
          CHECK(v.phi_vanishes);
          CHECK(v.psi_vanishes);
          CHECK(v.phi_twisted.e2 == Rational(-v.k + n - 3 - j));
        }
      }
    }
  }
  CHECK_THROWS_AS(ladder_vanishing(2, 0, 4), DomainError);
}

TEST_CASE("shift analysis") {
  GradedExtTable minus(6, Exactness::Exact);
  GradedExtTable plus(6, Exactness::Exact);
  for (int k = 0; k <= 6; ++k) {
    minus.set(0, k, k + 1);
    plus.set(0, k, k);
  }
  const auto a = analyse_shifts(minus, plus);
  REQUIRE(a.size() == 1);
  CHECK_FALSE(a[0].identical);
  CHECK(a[0].shift == 1);
  CHECK(a[0].overlap == 6);

  const auto same = analyse_shifts(minus, minus);
  CHECK(same[0].identical);
  CHECK(same[0].shift == 0);
}

TEST_CASE("hom_compare examples") {
  const auto same = hom_compare(GeneratorSheaf(0, 0, 4), GeneratorSheaf(0, 0, 4), 2);
  CHECK(same.minus_side == same.plus_side);

  const auto o1 = hom_compare(GeneratorSheaf(0, 0, 4), GeneratorSheaf(0, 1, 4), 1);
  CHECK(o1.minus_side.at(0, 0) == 6);
  CHECK_FALSE(o1.shifts.empty());

  const auto end = hom_compare(GeneratorSheaf(1, 0, 4), GeneratorSheaf(1, 0, 4), 0);
  CHECK(end.minus_side.at(0, 0) == 1);

  CHECK_THROWS_AS(hom_compare(GeneratorSheaf(0, 2, 4), GeneratorSheaf(0, 0, 4), 1), Unsupported);
  const auto j = o1.to_json();
  CHECK(j.contains("minus"));
  CHECK(j.contains("plus"));
  CHECK(j.contains("shifts"));
}
