#include "flopcheck/lattice.hpp"

#include <string>

#include "flopcheck/errors.hpp"

namespace flopcheck {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

// "2E1'", "-E2", "1/2E1'" ...
void append_term(std::string& out, const Rational& c, const char* symbol) {
  const Rational zero(0);
  if (c == zero) return;
  if (c < zero) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  const Rational mag = c < zero ? -c : c;
  if (mag != Rational(1)) out += to_string(mag);
  out += symbol;
}

}  // namespace

std::string DivClassY::to_string() const {
  std::string out;
  append_term(out, pullback, "f*O_X(1)");
  append_term(out, e1, "E1'");
  append_term(out, e2, "E2");
  return out.empty() ? "0" : out;
}

CurveClassY::CurveClassY(Rational a_, Rational b_) : a(a_), b(b_) {
  if (a < Rational(0) || b < Rational(0)) throw DomainError("curve classes lie in the cone spanned by l1' and l2");
}

std::string CurveClassY::to_string() const {
  std::string out;
  append_term(out, a, "l1'");
  append_term(out, b, "l2");
  return out.empty() ? "0" : out;
}

Rational pair(const DivClassY& d, const CurveClassY& c) {
  const Rational with_l1 = -d.e1 + 2 * d.e2;
  const Rational with_l2 = -d.e2;
  return c.a * with_l1 + c.b * with_l2;
}

bool relative_nef(const DivClassY& d) {
  const Rational zero(0);
  return pair(d, CurveClassY::l1()) >= zero && pair(d, CurveClassY::l2()) >= zero;
}

bool effective_exceptional(const DivClassY& d) {
  const Rational zero(0);
  return d.pullback == zero && d.e1 >= zero && d.e2 >= zero;
}

std::pair<std::int64_t, std::int64_t> canonical_coefficients(int n) {
  if (n < 4) throw DomainError("canonical_coefficients needs n >= 4, got " + std::to_string(n));
  return {2 * n - 4, n - 3};
}

std::pair<std::int64_t, std::int64_t> canonical_coefficients_from_codimensions(int n) {
  if (n < 4) throw DomainError("canonical_coefficients needs n >= 4, got " + std::to_string(n));
  const FlopDimensions d = flop_dimensions(2, n);
  // First blow-up: centre G, the zero section. Second: centre W', the
  // strict transform of W, which has the same dimension as W.
  return {d.dim_X - d.dim_G - 1, d.dim_X - d.dim_W - 1};
}

DivClassY relative_canonical(int n) {
  const auto [a1, a2] = canonical_coefficients(n);
  return {0, a1, a2};
}

FlopDimensions flop_dimensions(int r, int n) {
  if (r < 1 || 2 * r > n) {
    throw DomainError("flop_dimensions needs 1 <= r and 2r <= n, got r=" + std::to_string(r) +
                      ", n=" + std::to_string(n));
  }
  const std::int64_t dim_g = static_cast<std::int64_t>(r) * (n - r);
  return {r,
          n,
          dim_g,
          2 * dim_g,
          2 * dim_g + 1,
          2 * static_cast<std::int64_t>(r - 1) * (n - r + 1) + n - 2 * r + 1};
}

PicardRelationReport picard_relation_check() {
  const DivClassY plus = DivClassY::plus_hyperplane();
  const Rational l1 = pair(plus, CurveClassY::l1());
  const Rational l2 = pair(plus, CurveClassY::l2());
  return {plus, l1, l2, l1 == Rational(0)};
}

}  // namespace flopcheck
