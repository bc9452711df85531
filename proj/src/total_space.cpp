#include "flopcheck/total_space.hpp"

#include <algorithm>
#include <sstream>

#include "flopcheck/errors.hpp"

namespace flopcheck {

const char* to_string(TotalSpaceKind kind) {
  return kind == TotalSpaceKind::Cotangent ? "cotangent" : "extended-cotangent";
}

const char* to_string(FlopSide side) { return side == FlopSide::Minus ? "minus" : "plus"; }

// ---------------------------------------------------------------------------
// GradedExtTable

void GradedExtTable::set(int p, int k, std::int64_t dim) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  if (dim == 0) {
    entries_.erase({p, k});
  } else {
    entries_[{p, k}] = dim;
  }
}

std::int64_t GradedExtTable::at(int p, int k) const {
  auto it = entries_.find({p, k});
  return it == entries_.end() ? 0 : it->second;
}

int GradedExtTable::max_degree() const {
  int out = -1;
  for (const auto& [key, dim] : entries_) out = std::max(out, key.first);
  return out;
}

std::int64_t GradedExtTable::euler_char_at(int k) const {
  std::int64_t chi = 0;
  for (const auto& [key, dim] : entries_) {
    if (key.second == k) chi += key.first % 2 == 0 ? dim : -dim;
  }
  return chi;
}

nlohmann::json GradedExtTable::to_json() const {
  // Entries sorted by (p, k).
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, dim] : entries_) entries.push_back({key.first, key.second, dim});
  return {{"cutoff", cutoff_}, {"entries", entries}, {"exactness", to_string(exactness_)}};
}

std::string GradedExtTable::to_text() const {
  std::ostringstream out;
  const int top = std::max(0, max_degree());
  out << "p\\k";
  for (int k = 0; k <= cutoff_; ++k) out << '\t' << k;
  out << '\n';
  for (int p = 0; p <= top; ++p) {
    out << p;
    for (int k = 0; k <= cutoff_; ++k) out << '\t' << at(p, k);
    out << '\n';
  }
  out << "(" << to_string(exactness_) << ")\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Total spaces

NormalForm pushforward_graded(int k, const TotalSpaceModel& m) {
  if (k < 0) throw DomainError("pushforward_graded: negative grading");
  if (m.kind == TotalSpaceKind::Cotangent) {
    return normalize(BundleExpr::sym(k, BundleExpr::tangent()), m.base);
  }
  return sym_of_graded_extension(k, BundleExpr::extended_tangent(), m.base);
}

namespace {

bool has_extension(const BundleExpr& e) {
  if (e.kind() == BundleExpr::Kind::Extension || e.kind() == BundleExpr::Kind::SymExtension) {
    return true;
  }
  return std::any_of(e.children().begin(), e.children().end(), has_extension);
}

}  // namespace

GradedExtTable graded_hom(const BundleExpr& a, const BundleExpr& b, const TotalSpaceModel& m,
                          int cutoff) {
  if (cutoff < 0) throw DomainError("graded_hom: negative cutoff");
  for (const auto* e : {&a, &b}) {
    if (has_extension(*e)) {
      throw Unsupported("graded_hom needs pullbacks of split homogeneous bundles, got '" +
                        e->to_string() + "'");
    }
  }
  const NormalForm hom = normalize(BundleExpr::dual(a) * b, m.base);
  GradedExtTable table(cutoff, m.kind == TotalSpaceKind::Cotangent ? Exactness::Exact
                                                                   : Exactness::E1Bound);
  for (int k = 0; k <= cutoff; ++k) {
    const NormalForm piece = tensor(hom, pushforward_graded(k, m));
    for (const auto& [p, dim] : cohomology_of_sum(m.base, piece)) table.set(p, k, dim);
  }
  return table;
}

// ---------------------------------------------------------------------------
// K-classes and the Gram matrix

KClass::KClass(const NormalForm& nf) {
  for (const auto& [b, mult] : nf.terms()) add(b, mult);
}

void KClass::add(const HomogBundle& b, std::int64_t coefficient) {
  auto& c = terms_[b];
  c += coefficient;
  if (c == 0) terms_.erase(b);
}

void KClass::add(const KClass& other, std::int64_t scale) {
  for (const auto& [b, c] : other.terms_) add(b, scale * c);
}

std::int64_t KClass::rank() const {
  std::int64_t total = 0;
  for (const auto& [b, c] : terms_) total += c * b.rank();
  return total;
}

KClass KClass::twisted(int j) const {
  KClass out;
  for (const auto& [b, c] : terms_) out.add(b.twisted(j), c);
  return out;
}

std::string KClass::to_string() const {
  std::string out;
  for (const auto& [b, c] : terms_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += b.to_string();
  }
  return out.empty() ? "0" : out;
}

std::int64_t euler_pairing(const GrassmannData& g, const KClass& a, const KClass& b) {
  std::int64_t total = 0;
  for (const auto& [x, cx] : a.terms()) {
    const NormalForm xd = NormalForm::single(x.dual());
    for (const auto& [y, cy] : b.terms()) {
      total += cx * cy * euler_char(g, tensor(xd, NormalForm::single(y)));
    }
  }
  return total;
}

HomogBundle spanning_generator(const GrassmannData& g, int i, int j) {
  std::vector<int> lambda(g.r(), 0);
  lambda.back() = -i;
  return {GLWeight::constant(g.quotient_rank(), j), GLWeight(lambda)};
}

std::vector<std::pair<int, int>> spanning_generator_indices(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= n - 2; ++i) {
    for (int j = 0; i + j <= n - 2; ++j) out.emplace_back(i, j);
  }
  return out;
}

GramResult spanning_gram(const GrassmannData& g, const std::vector<std::pair<int, int>>& gens) {
  for (const auto& [i, j] : gens) {
    if (i < 0 || j < 0 || i + j > g.n() - 2) {
      throw DomainError("generator (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is outside i, j >= 0, i + j <= " + std::to_string(g.n() - 2));
    }
  }
  std::vector<KClass> classes;
  for (const auto& [i, j] : gens) {
    KClass c;
    c.add(spanning_generator(g, i, j), 1);
    classes.push_back(std::move(c));
  }
  GramResult out;
  out.matrix.assign(gens.size(), std::vector<std::int64_t>(gens.size(), 0));
  for (std::size_t u = 0; u < gens.size(); ++u) {
    for (std::size_t v = 0; v < gens.size(); ++v) {
      out.matrix[u][v] = euler_pairing(g, classes[u], classes[v]);
    }
  }
  out.determinant = integer_determinant(out.matrix);
  return out;
}

BigInt integer_determinant(const std::vector<std::vector<std::int64_t>>& matrix) {
  const std::size_t size = matrix.size();
  if (size == 0) return 1;
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size));
  for (std::size_t i = 0; i < size; ++i) {
    if (matrix[i].size() != size) throw std::invalid_argument("determinant of a non-square matrix");
    for (std::size_t j = 0; j < size; ++j) a[i][j] = matrix[i][j];
  }
  // Bareiss elimination: every division below is exact.
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == size) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

}  // namespace flopcheck
