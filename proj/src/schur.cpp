#include "flopcheck/schur.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "flopcheck/errors.hpp"

namespace flopcheck {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

void require_decreasing(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] < v[i]) {
      throw InvalidWeight("weight (" + join_ints(v) + ") is not weakly decreasing");
    }
  }
}

// Labels of a partially built LR tableau: counts[row][label] is the number
// of boxes carrying `label` in `row`.
using LabelCounts = std::vector<std::vector<int>>;

bool is_lattice_word(const LabelCounts& counts, int labels) {
  std::vector<int> seen(labels, 0);
  for (const auto& row : counts) {
    // Each row is read right to left, i.e. largest label first.
    for (int t = labels - 1; t >= 0; --t) {
      seen[t] += row[t];
      if (t > 0 && seen[t] > seen[t - 1]) return false;
    }
  }
  return true;
}

// Adds a horizontal strip of `remaining` boxes labelled `label` to `shape`,
// row by row, then recurses into the next label.
struct LrEnumerator {
  const std::vector<int>& content;
  int max_rows;
  std::map<std::vector<int>, std::int64_t>& out;

  void place_label(std::vector<int>& shape, LabelCounts& counts, int label) {
    if (label == static_cast<int>(content.size())) {
      if (is_lattice_word(counts, static_cast<int>(content.size()))) {
        ++out[shape];
      }
      return;
    }
    const std::vector<int> before = shape;
    fill_row(shape, before, counts, label, 0, content[label]);
  }

  void fill_row(std::vector<int>& shape, const std::vector<int>& before,
                LabelCounts& counts, int label, int row, int remaining) {
    if (remaining == 0) {
      place_label(shape, counts, label + 1);
      return;
    }
    if (row >= max_rows) return;
    // Horizontal strip: row i may grow up to the old length of row i-1.
    const int cap = row == 0 ? before[0] + remaining : std::min(before[row - 1], before[row] + remaining);
    for (int len = cap; len >= before[row]; --len) {
      const int added = len - before[row];
      // A lattice word never puts label t above row t.
      if (added > 0 && row < label) continue;
      shape[row] = len;
      counts[row][label] = added;
      fill_row(shape, before, counts, label, row + 1, remaining - added);
      counts[row][label] = 0;
    }
    shape[row] = before[row];
  }
};

// LR expansion of two partitions, keeping only results with at most
// `max_rows` rows. Keys are padded to max_rows.
std::map<std::vector<int>, std::int64_t> lr_partitions(const std::vector<int>& lambda,
                                                       const std::vector<int>& mu,
                                                       int max_rows) {
  std::map<std::vector<int>, std::int64_t> out;
  std::vector<int> shape(max_rows, 0);
  std::copy(lambda.begin(), lambda.end(), shape.begin());
  std::vector<int> content;
  for (int part : mu) {
    if (part > 0) content.push_back(part);
  }
  LabelCounts counts(max_rows, std::vector<int>(content.size(), 0));
  LrEnumerator enumerator{content, max_rows, out};
  enumerator.place_label(shape, counts, 0);
  return out;
}

void partitions_rec(int remaining, int max_part, int max_length, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (static_cast<int>(prefix.size()) == max_length) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, max_length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  require_decreasing(parts_);
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  if (!parts_.empty() && parts_.back() < 0) {
    throw InvalidWeight("partition (" + join_ints(parts_) + ") has negative parts");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> conj(parts_.empty() ? 0 : parts_.front(), 0);
  for (int part : parts_) {
    for (int c = 0; c < part; ++c) ++conj[c];
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const { return "(" + join_ints(parts_) + ")"; }

// ---------------------------------------------------------------------------
// GLWeight

GLWeight::GLWeight(std::vector<int> entries) : entries_(std::move(entries)) {
  require_decreasing(entries_);
}

GLWeight GLWeight::constant(int m, int c) { return GLWeight(std::vector<int>(m, c)); }

GLWeight GLWeight::from_partition(const Partition& p, int m) {
  if (p.length() > m) {
    throw InvalidWeight("partition " + p.to_string() + " has more than " + std::to_string(m) +
                        " parts");
  }
  std::vector<int> entries(m, 0);
  std::copy(p.parts().begin(), p.parts().end(), entries.begin());
  return GLWeight(std::move(entries));
}

GLWeight GLWeight::parse(std::string_view text) {
  // U+2212 MINUS SIGN is accepted alongside '-'.
  std::string ascii;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, 3) == "\xE2\x88\x92") {
      ascii += '-';
      i += 2;
    } else {
      ascii += text[i];
    }
  }
  std::vector<int> entries;
  std::stringstream ss(ascii);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty entry in weight '" + ascii + "'");
    const auto last = item.find_last_not_of(" \t");
    const std::string token = item.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + token + "'");
    }
    if (used != token.size()) throw ParseError("not an integer: '" + token + "'");
    entries.push_back(value);
  }
  if (entries.empty()) throw ParseError("empty weight");
  return GLWeight(std::move(entries));
}

GLWeight GLWeight::shifted(int c) const {
  std::vector<int> out = entries_;
  for (int& e : out) e += c;
  return GLWeight(std::move(out));
}

int GLWeight::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool GLWeight::is_constant() const {
  return std::adjacent_find(entries_.begin(), entries_.end(), std::not_equal_to<>()) ==
         entries_.end();
}

std::string GLWeight::to_string() const { return join_ints(entries_); }

// ---------------------------------------------------------------------------
// IrrepSum

void IrrepSum::add(const GLWeight& w, std::int64_t multiplicity) {
  if (multiplicity < 0) throw std::invalid_argument("IrrepSum multiplicities must be positive");
  if (multiplicity == 0) return;
  terms_[w] += multiplicity;
}

std::int64_t IrrepSum::multiplicity(const GLWeight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t IrrepSum::total_dim() const {
  std::int64_t total = 0;
  for (const auto& [w, mult] : terms_) total += mult * weyl_dim(w);
  return total;
}

std::string IrrepSum::to_string() const {
  std::string out;
  for (const auto& [w, mult] : terms_) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult) + "*";
    out += "(" + w.to_string() + ")";
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Free functions

std::int64_t weyl_dim(const std::vector<int>& nu) {
  require_decreasing(nu);
  BigInt num = 1;
  BigInt den = 1;
  const int m = static_cast<int>(nu.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      num *= nu[i] - nu[j] + j - i;
      den *= j - i;
    }
  }
  BigInt dim = num / den;
  if (dim > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("Weyl dimension exceeds 64 bits");
  }
  return dim.convert_to<std::int64_t>();
}

std::int64_t weyl_dim(const GLWeight& nu) { return weyl_dim(nu.entries()); }

GLWeight dual_weight(const GLWeight& nu) {
  std::vector<int> out(nu.entries().rbegin(), nu.entries().rend());
  for (int& e : out) e = -e;
  return GLWeight(std::move(out));
}

IrrepSum lr_tensor(const GLWeight& lambda, const GLWeight& mu) {
  if (lambda.length() != mu.length()) {
    throw LengthMismatch("lr_tensor: weights of length " + std::to_string(lambda.length()) +
                         " and " + std::to_string(mu.length()));
  }
  const int m = lambda.length();
  IrrepSum out;
  if (m == 0) {
    out.add(GLWeight{});
    return out;
  }
  // Shift both weights to partitions; LR coefficients are shift-invariant.
  const int shift_l = lambda[m - 1];
  const int shift_m = mu[m - 1];
  const auto pl = lambda.shifted(-shift_l).entries();
  const auto pm = mu.shifted(-shift_m).entries();
  for (const auto& [nu, mult] : lr_partitions(pl, pm, m)) {
    out.add(GLWeight(nu).shifted(shift_l + shift_m), mult);
  }
  return out;
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  const int rows = std::max({lambda.length(), mu.length(), nu.length()});
  auto expansion = lr_partitions(lambda.parts(), mu.parts(), rows);
  auto key = GLWeight::from_partition(nu, rows).entries();
  auto it = expansion.find(key);
  return it == expansion.end() ? 0 : it->second;
}

std::vector<Partition> partitions_of(int k, int max_length) {
  std::vector<Partition> out;
  if (k < 0 || max_length < 0) return out;
  std::vector<int> prefix;
  partitions_rec(k, k, max_length, prefix, out);
  return out;
}

std::vector<std::pair<Partition, Partition>> cauchy_sym(int k, int rank_a, int rank_b) {
  std::vector<std::pair<Partition, Partition>> out;
  for (auto& kappa : partitions_of(k, std::min(rank_a, rank_b))) out.emplace_back(kappa, kappa);
  return out;
}

std::vector<std::pair<Partition, Partition>> cauchy_wedge(int k, int rank_a, int rank_b) {
  std::vector<std::pair<Partition, Partition>> out;
  for (auto& kappa : partitions_of(k, rank_a)) {
    Partition conj = kappa.conjugate();
    if (conj.length() <= rank_b) out.emplace_back(kappa, std::move(conj));
  }
  return out;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  if (result > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return result.convert_to<std::int64_t>();
}

}  // namespace flopcheck
