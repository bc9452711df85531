#include "flopcheck/bott.hpp"

#include <algorithm>
#include <vector>

#include "flopcheck/errors.hpp"

namespace flopcheck {

GrassmannData::GrassmannData(int r, int n) : r_(r), n_(n) {
  if (r < 1 || 2 * r > n) {
    throw DomainError("G(" + std::to_string(r) + "," + std::to_string(n) +
                      ") requires 1 <= r and 2r <= n");
  }
}

std::string GrassmannData::to_string() const {
  return "G(" + std::to_string(r_) + "," + std::to_string(n_) + ")";
}

HomogBundle HomogBundle::trivial(const GrassmannData& g) { return line(g, 0); }

HomogBundle HomogBundle::line(const GrassmannData& g, int j) {
  return {GLWeight::constant(g.quotient_rank(), j), GLWeight::constant(g.r(), 0)};
}

void HomogBundle::validate(const GrassmannData& g) const {
  if (mu.length() != g.quotient_rank() || lambda.length() != g.r()) {
    throw LengthMismatch("bundle " + to_string() + " does not fit " + g.to_string() +
                         ": expected |mu| = " + std::to_string(g.quotient_rank()) +
                         " and |lambda| = " + std::to_string(g.r()));
  }
}

std::int64_t HomogBundle::rank() const { return weyl_dim(mu) * weyl_dim(lambda); }

HomogBundle HomogBundle::twisted(int j) const { return {mu.shifted(j), lambda}; }

HomogBundle HomogBundle::dual() const { return {dual_weight(mu), dual_weight(lambda)}; }

std::string HomogBundle::to_string() const {
  return "Q[" + mu.to_string() + "]S[" + lambda.to_string() + "]";
}

CohomologyResult bott_cohomology(const GrassmannData& g, const HomogBundle& b) {
  b.validate(g);
  const int n = g.n();
  std::vector<int> shifted;
  shifted.reserve(n);
  shifted.insert(shifted.end(), b.mu.begin(), b.mu.end());
  shifted.insert(shifted.end(), b.lambda.begin(), b.lambda.end());
  for (int i = 0; i < n; ++i) shifted[i] += n - 1 - i;

  // Bubble sort into strictly decreasing order, counting transpositions.
  int inversions = 0;
  for (int pass = 0; pass < n; ++pass) {
    for (int i = 0; i + 1 < n - pass; ++i) {
      if (shifted[i] == shifted[i + 1]) return std::nullopt;
      if (shifted[i] < shifted[i + 1]) {
        std::swap(shifted[i], shifted[i + 1]);
        ++inversions;
      }
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (shifted[i] == shifted[i + 1]) return std::nullopt;
  }
  for (int i = 0; i < n; ++i) shifted[i] -= n - 1 - i;
  GLWeight rep(std::move(shifted));
  const std::int64_t dim = weyl_dim(rep);
  return NonzeroCohomology{inversions, std::move(rep), dim};
}

HomogBundle serre_dual_bundle(const GrassmannData& g, const HomogBundle& b) {
  b.validate(g);
  return b.dual().twisted(-g.n());
}

std::int64_t euler_char(const GrassmannData& g, const HomogBundle& b) {
  auto h = bott_cohomology(g, b);
  if (!h) return 0;
  return h->degree % 2 == 0 ? h->dim : -h->dim;
}

CohomologyTable cohomology_of_sum(const GrassmannData& g,
                                  std::span<const std::pair<HomogBundle, std::int64_t>> terms) {
  CohomologyTable table;
  for (const auto& [bundle, mult] : terms) {
    if (auto h = bott_cohomology(g, bundle)) table[h->degree] += mult * h->dim;
  }
  std::erase_if(table, [](const auto& entry) { return entry.second == 0; });
  return table;
}

}  // namespace flopcheck
