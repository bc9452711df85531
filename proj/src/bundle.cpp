#include "flopcheck/bundle.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "flopcheck/errors.hpp"

namespace flopcheck {

const char* to_string(Exactness e) { return e == Exactness::Exact ? "exact" : "e1-bound"; }

// ---------------------------------------------------------------------------
// BundleExpr

struct BundleExpr::Node {
  Kind kind;
  int parameter = 0;
  std::vector<int> weight;
  std::vector<BundleExpr> children;
};

BundleExpr::BundleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

BundleExpr BundleExpr::make(Kind kind, int parameter, std::vector<int> weight,
                            std::vector<BundleExpr> children) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->parameter = parameter;
  node->weight = std::move(weight);
  node->children = std::move(children);
  return BundleExpr(std::move(node));
}

BundleExpr BundleExpr::sub() { return make(Kind::Sub, 0, {}, {}); }
BundleExpr BundleExpr::quotient() { return make(Kind::Quotient, 0, {}, {}); }

BundleExpr BundleExpr::schur_sub(std::vector<int> weight) {
  GLWeight check(weight);
  return make(Kind::Schur, 0, std::move(weight), {});
}

BundleExpr BundleExpr::schur_quotient(std::vector<int> weight) {
  GLWeight check(weight);
  return make(Kind::Schur, 1, std::move(weight), {});
}

BundleExpr BundleExpr::line(int j) { return make(Kind::Line, j, {}, {}); }

BundleExpr BundleExpr::trivial(int rank) {
  if (rank < 0) throw DomainError("trivial bundle of negative rank");
  return make(Kind::Trivial, rank, {}, {});
}

BundleExpr BundleExpr::dual(BundleExpr e) {
  return make(Kind::Dual, 0, {}, {std::move(e)});
}

BundleExpr BundleExpr::tensor(std::vector<BundleExpr> factors) {
  if (factors.empty()) return line(0);
  if (factors.size() == 1) return factors.front();
  return make(Kind::Tensor, 0, {}, std::move(factors));
}

BundleExpr BundleExpr::sum(std::vector<BundleExpr> summands) {
  if (summands.empty()) return trivial(0);
  if (summands.size() == 1) return summands.front();
  return make(Kind::Sum, 0, {}, std::move(summands));
}

BundleExpr BundleExpr::sym(int k, BundleExpr e) {
  if (k < 0) throw DomainError("sym: negative power");
  return make(Kind::Sym, k, {}, {std::move(e)});
}

BundleExpr BundleExpr::wedge(int k, BundleExpr e) {
  if (k < 0) throw DomainError("wedge: negative power");
  return make(Kind::Wedge, k, {}, {std::move(e)});
}

BundleExpr BundleExpr::extension(std::vector<BundleExpr> pieces) {
  if (pieces.empty()) throw DomainError("extension needs at least one graded piece");
  return make(Kind::Extension, 0, {}, std::move(pieces));
}

BundleExpr BundleExpr::sym_extension(int k, BundleExpr extension) {
  if (k < 0) throw DomainError("symext: negative power");
  return make(Kind::SymExtension, k, {}, {std::move(extension)});
}

BundleExpr BundleExpr::tangent() { return dual(sub()) * quotient(); }
BundleExpr BundleExpr::cotangent() { return dual(quotient()) * sub(); }
BundleExpr BundleExpr::extended_cotangent() { return extension({cotangent(), line(0)}); }
BundleExpr BundleExpr::extended_tangent() { return extension({line(0), tangent()}); }

BundleExpr operator*(BundleExpr a, BundleExpr b) {
  return BundleExpr::tensor({std::move(a), std::move(b)});
}

BundleExpr operator+(BundleExpr a, BundleExpr b) {
  return BundleExpr::sum({std::move(a), std::move(b)});
}

BundleExpr::Kind BundleExpr::kind() const { return node_->kind; }
int BundleExpr::parameter() const { return node_->parameter; }
const std::vector<int>& BundleExpr::weight() const { return node_->weight; }
const std::vector<BundleExpr>& BundleExpr::children() const { return node_->children; }

namespace {

std::string join_children(const std::vector<BundleExpr>& children, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i > 0) out += sep;
    const bool wrap = std::string_view(sep) == " * " &&
                      children[i].kind() == BundleExpr::Kind::Sum;
    out += wrap ? "(" + children[i].to_string() + ")" : children[i].to_string();
  }
  return out;
}

}  // namespace

std::string BundleExpr::to_string() const {
  const auto& c = node_->children;
  switch (node_->kind) {
    case Kind::Sub: return "S";
    case Kind::Quotient: return "Q";
    case Kind::Schur:
      return std::string(node_->parameter == 0 ? "S{" : "Q{") + GLWeight(node_->weight).to_string() + "}";
    case Kind::Line: return "O(" + std::to_string(node_->parameter) + ")";
    case Kind::Trivial: return "triv(" + std::to_string(node_->parameter) + ")";
    case Kind::Dual: return "dual(" + c[0].to_string() + ")";
    case Kind::Tensor: return join_children(c, " * ");
    case Kind::Sum: return join_children(c, " + ");
    case Kind::Sym: return "sym(" + std::to_string(node_->parameter) + ", " + c[0].to_string() + ")";
    case Kind::Wedge: return "wedge(" + std::to_string(node_->parameter) + ", " + c[0].to_string() + ")";
    case Kind::Extension: return "ext(" + join_children(c, ", ") + ")";
    case Kind::SymExtension:
      return "symext(" + std::to_string(node_->parameter) + ", " + c[0].to_string() + ")";
  }
  return {};
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text.substr(i, 3) == "\xE2\x88\x92") {
        src_ += '-';
        i += 2;
      } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        src_ += text[i];
      }
    }
  }

  BundleExpr parse() {
    BundleExpr e = expr();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  BundleExpr expr() {
    std::vector<BundleExpr> terms{term()};
    while (accept('+')) terms.push_back(term());
    return BundleExpr::sum(std::move(terms));
  }

  BundleExpr term() {
    std::vector<BundleExpr> factors{factor()};
    while (accept('*')) factors.push_back(factor());
    return BundleExpr::tensor(std::move(factors));
  }

  BundleExpr factor() {
    if (accept('(')) {
      BundleExpr e = expr();
      expect(')');
      return e;
    }
    const std::string name = identifier();
    if (name == "S" || name == "Q") {
      if (accept('{')) {
        std::vector<int> w{integer()};
        while (accept(',')) w.push_back(integer());
        expect('}');
        try {
          return name == "S" ? BundleExpr::schur_sub(std::move(w))
                             : BundleExpr::schur_quotient(std::move(w));
        } catch (const InvalidWeight& err) {
          fail(err.what());
        }
      }
      return name == "S" ? BundleExpr::sub() : BundleExpr::quotient();
    }
    if (name == "O") {
      if (!accept('(')) return BundleExpr::line(0);
      const int j = integer();
      expect(')');
      return BundleExpr::line(j);
    }
    if (name == "T") return BundleExpr::tangent();
    if (name == "Omega") return BundleExpr::cotangent();
    if (name == "Ttilde") return BundleExpr::extended_tangent();
    if (name == "Omegatilde") return BundleExpr::extended_cotangent();
    if (name == "triv") {
      expect('(');
      const int m = integer();
      expect(')');
      if (m < 0) fail("triv needs a non-negative rank");
      return BundleExpr::trivial(m);
    }
    if (name == "dual") {
      expect('(');
      BundleExpr e = expr();
      expect(')');
      return BundleExpr::dual(std::move(e));
    }
    if (name == "sym" || name == "wedge" || name == "symext") {
      expect('(');
      const int k = integer();
      if (k < 0) fail(name + " needs a non-negative power");
      expect(',');
      BundleExpr e = expr();
      expect(')');
      if (name == "sym") return BundleExpr::sym(k, std::move(e));
      if (name == "wedge") return BundleExpr::wedge(k, std::move(e));
      return BundleExpr::sym_extension(k, std::move(e));
    }
    if (name == "ext") {
      expect('(');
      std::vector<BundleExpr> pieces{expr()};
      while (accept(',')) pieces.push_back(expr());
      expect(')');
      return BundleExpr::extension(std::move(pieces));
    }
    fail(name.empty() ? "expected a bundle" : "unknown name '" + name + "'");
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  int integer() {
    const std::size_t start = pos_;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    return std::stoi(src_.substr(start, pos_ - start));
  }

  bool accept(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("bundle expression, position " + std::to_string(pos_) + ": " + msg);
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

BundleExpr BundleExpr::parse(std::string_view text) { return ExprParser(text).parse(); }

// ---------------------------------------------------------------------------
// NormalForm

NormalForm NormalForm::single(const HomogBundle& b, std::int64_t multiplicity) {
  NormalForm nf;
  nf.add(b, multiplicity);
  return nf;
}

void NormalForm::add(const HomogBundle& b, std::int64_t multiplicity) {
  if (multiplicity < 0) throw std::invalid_argument("NormalForm multiplicities must be positive");
  if (multiplicity == 0) return;
  terms_[b] += multiplicity;
}

void NormalForm::add(const NormalForm& other) {
  for (const auto& [b, mult] : other.terms_) add(b, mult);
  if (other.exactness_ == Exactness::E1Bound) mark_e1_bound();
}

std::int64_t NormalForm::multiplicity(const HomogBundle& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t NormalForm::rank() const {
  std::int64_t total = 0;
  for (const auto& [b, mult] : terms_) total += mult * b.rank();
  return total;
}

NormalForm NormalForm::dual() const {
  NormalForm out(exactness_);
  for (const auto& [b, mult] : terms_) out.add(b.dual(), mult);
  return out;
}

NormalForm NormalForm::twisted(int j) const {
  NormalForm out(exactness_);
  for (const auto& [b, mult] : terms_) out.add(b.twisted(j), mult);
  return out;
}

std::vector<std::pair<HomogBundle, std::int64_t>> NormalForm::as_list() const {
  return {terms_.begin(), terms_.end()};
}

std::string NormalForm::to_string() const {
  std::string out;
  for (const auto& [b, mult] : terms_) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult) + "*";
    out += b.to_string();
  }
  return out.empty() ? "0" : out;
}

NormalForm tensor(const NormalForm& a, const NormalForm& b) {
  NormalForm out(a.exactness() == Exactness::Exact && b.exactness() == Exactness::Exact
                     ? Exactness::Exact
                     : Exactness::E1Bound);
  for (const auto& [x, mx] : a.terms()) {
    for (const auto& [y, my] : b.terms()) {
      const IrrepSum q = lr_tensor(x.mu, y.mu);
      const IrrepSum s = lr_tensor(x.lambda, y.lambda);
      for (const auto& [qw, qm] : q.terms()) {
        for (const auto& [sw, sm] : s.terms()) out.add({qw, sw}, mx * my * qm * sm);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sym and wedge powers

namespace {

// One tensor factor of an irreducible bundle: det^shift, optionally times
// the defining representation (or its dual) of GL_rank.
struct SimpleFactor {
  enum class Shape { Line, Defining, DualDefining };
  Shape shape;
  int shift;
  int rank;  // rank of the factor itself, 1 for Line
  int length;

  static std::optional<SimpleFactor> classify(const GLWeight& w) {
    const int m = w.length();
    if (m == 0 || w.is_constant()) return SimpleFactor{Shape::Line, m == 0 ? 0 : w[0], 1, m};
    const int last = w[m - 1];
    const int first = w[0];
    if (w[0] == last + 1 && (m == 1 || w[1] == last)) {
      return SimpleFactor{Shape::Defining, last, m, m};
    }
    if (w[m - 1] == first - 1 && (m == 1 || w[m - 2] == first)) {
      return SimpleFactor{Shape::DualDefining, first, m, m};
    }
    return std::nullopt;
  }

  // Sigma_kappa of this factor, or nullopt when it vanishes.
  std::optional<GLWeight> schur(const Partition& kappa) const {
    const int shift_total = shift * kappa.size();
    if (length == 0) {
      if (kappa.size() != 0) return std::nullopt;
      return GLWeight{};
    }
    switch (shape) {
      case Shape::Line:
        if (kappa.length() > 1) return std::nullopt;
        return GLWeight::constant(length, shift_total);
      case Shape::Defining:
        if (kappa.length() > length) return std::nullopt;
        return GLWeight::from_partition(kappa, length).shifted(shift_total);
      case Shape::DualDefining:
        if (kappa.length() > length) return std::nullopt;
        return dual_weight(GLWeight::from_partition(kappa, length)).shifted(shift_total);
    }
    return std::nullopt;
  }
};

enum class PowerKind { Sym, Wedge };

NormalForm power_of_irreducible(const HomogBundle& b, int k, PowerKind kind) {
  const auto q = SimpleFactor::classify(b.mu);
  const auto s = SimpleFactor::classify(b.lambda);
  if (!q || !s) {
    throw Unsupported(std::string(kind == PowerKind::Sym ? "sym" : "wedge") + " of " +
                      b.to_string() + " would need a plethysm");
  }
  const auto pairs = kind == PowerKind::Sym ? cauchy_sym(k, q->rank, s->rank)
                                            : cauchy_wedge(k, q->rank, s->rank);
  NormalForm out;
  for (const auto& [kq, ks] : pairs) {
    auto qw = q->schur(kq);
    auto sw = s->schur(ks);
    if (qw && sw) out.add({*qw, *sw});
  }
  return out;
}

NormalForm power(const NormalForm& nf, int k, PowerKind kind, const NormalForm& unit) {
  if (k < 0) throw DomainError("negative power");
  if (nf.exactness() != Exactness::Exact) {
    throw Unsupported("sym/wedge of a graded extension must go through sym_of_graded_extension");
  }
  // Running table graded[a] = P^a of the summands processed so far, using
  // P^a(A + B) = sum over b of P^(a-b)(A) (x) P^b(B).
  std::vector<NormalForm> graded(k + 1);
  graded[0] = unit;
  for (const auto& [b, mult] : nf.terms()) {
    std::vector<NormalForm> pieces(k + 1);
    pieces[0] = unit;
    for (int a = 1; a <= k; ++a) pieces[a] = power_of_irreducible(b, a, kind);
    for (std::int64_t copy = 0; copy < mult; ++copy) {
      std::vector<NormalForm> next(k + 1);
      for (int a = 0; a <= k; ++a) {
        for (int c = 0; c <= a; ++c) {
          if (graded[a - c].empty() || pieces[c].empty()) continue;
          next[a].add(tensor(graded[a - c], pieces[c]));
        }
      }
      graded = std::move(next);
    }
  }
  return graded[k];
}

NormalForm unit_like(const NormalForm& nf) {
  if (nf.empty()) throw DomainError("cannot infer the Grassmannian of an empty sum");
  const auto& b = nf.terms().begin()->first;
  return NormalForm::single({GLWeight::constant(b.mu.length(), 0),
                             GLWeight::constant(b.lambda.length(), 0)});
}

}  // namespace

NormalForm sym_power(const NormalForm& nf, int k) {
  if (k == 0) return unit_like(nf);
  if (nf.empty()) return {};
  return power(nf, k, PowerKind::Sym, unit_like(nf));
}

NormalForm wedge_power(const NormalForm& nf, int k) {
  if (k == 0) return unit_like(nf);
  if (nf.empty()) return {};
  return power(nf, k, PowerKind::Wedge, unit_like(nf));
}

// ---------------------------------------------------------------------------
// normalize

namespace {

NormalForm power_in(const NormalForm& nf, int k, PowerKind kind, const GrassmannData& g) {
  const NormalForm unit = NormalForm::single(HomogBundle::trivial(g));
  if (k == 0) return unit;
  if (nf.empty()) return {};
  return power(nf, k, kind, unit);
}

}  // namespace

NormalForm normalize(const BundleExpr& e, const GrassmannData& g) {
  using Kind = BundleExpr::Kind;
  const int r = g.r();
  const int q = g.quotient_rank();
  switch (e.kind()) {
    case Kind::Sub: {
      std::vector<int> w(r, 0);
      w[0] = 1;
      return NormalForm::single({GLWeight::constant(q, 0), GLWeight(w)});
    }
    case Kind::Quotient: {
      std::vector<int> w(q, 0);
      w[0] = 1;
      return NormalForm::single({GLWeight(w), GLWeight::constant(r, 0)});
    }
    case Kind::Schur: {
      HomogBundle b = e.parameter() == 0
                          ? HomogBundle{GLWeight::constant(q, 0), GLWeight(e.weight())}
                          : HomogBundle{GLWeight(e.weight()), GLWeight::constant(r, 0)};
      b.validate(g);
      return NormalForm::single(b);
    }
    case Kind::Line:
      return NormalForm::single(HomogBundle::line(g, e.parameter()));
    case Kind::Trivial:
      return NormalForm::single(HomogBundle::trivial(g), e.parameter());
    case Kind::Dual:
      return normalize(e.children()[0], g).dual();
    case Kind::Tensor: {
      NormalForm acc = NormalForm::single(HomogBundle::trivial(g));
      for (const auto& child : e.children()) acc = tensor(acc, normalize(child, g));
      return acc;
    }
    case Kind::Sum: {
      NormalForm acc;
      for (const auto& child : e.children()) acc.add(normalize(child, g));
      return acc;
    }
    case Kind::Sym:
    case Kind::Wedge: {
      const NormalForm inner = normalize(e.children()[0], g);
      if (inner.exactness() != Exactness::Exact) {
        throw Unsupported("sym/wedge of the graded extension in '" + e.to_string() +
                          "' must go through symext");
      }
      return power_in(inner, e.parameter(), e.kind() == Kind::Sym ? PowerKind::Sym : PowerKind::Wedge, g);
    }
    case Kind::Extension: {
      NormalForm acc(Exactness::E1Bound);
      for (const auto& child : e.children()) acc.add(normalize(child, g));
      return acc;
    }
    case Kind::SymExtension:
      return sym_of_graded_extension(e.parameter(), e.children()[0], g);
  }
  throw Unsupported("unknown expression node");
}

NormalForm sym_of_graded_extension(int k, const BundleExpr& extension, const GrassmannData& g) {
  if (k < 0) throw DomainError("symext: negative power");
  if (extension.kind() != BundleExpr::Kind::Extension) {
    throw Unsupported("symext expects an ext(...) node, got '" + extension.to_string() + "'");
  }
  const auto& pieces = extension.children();
  if (pieces.size() != 2) {
    throw Unsupported("symext supports two-step extensions only, got " +
                      std::to_string(pieces.size()) + " graded pieces");
  }
  const NormalForm unit = NormalForm::single(HomogBundle::trivial(g));
  const NormalForm first = normalize(pieces[0], g);
  const NormalForm second = normalize(pieces[1], g);
  const NormalForm* other = nullptr;
  if (first == unit) {
    other = &second;
  } else if (second == unit) {
    other = &first;
  } else {
    throw Unsupported("symext needs one graded piece equal to O");
  }
  NormalForm out(Exactness::E1Bound);
  for (int a = 0; a <= k; ++a) out.add(power_in(*other, a, PowerKind::Sym, g));
  out.mark_e1_bound();
  return out;
}

std::int64_t rank(const BundleExpr& e, const GrassmannData& g) {
  using Kind = BundleExpr::Kind;
  switch (e.kind()) {
    case Kind::Sub: return g.r();
    case Kind::Quotient: return g.quotient_rank();
    case Kind::Schur: return weyl_dim(e.weight());
    case Kind::Line: return 1;
    case Kind::Trivial: return e.parameter();
    case Kind::Dual: return rank(e.children()[0], g);
    case Kind::Tensor: {
      std::int64_t out = 1;
      for (const auto& c : e.children()) out *= rank(c, g);
      return out;
    }
    case Kind::Sum:
    case Kind::Extension: {
      std::int64_t out = 0;
      for (const auto& c : e.children()) out += rank(c, g);
      return out;
    }
    case Kind::Sym:
    case Kind::SymExtension: {
      const std::int64_t rk = rank(e.children()[0], g);
      const int k = e.parameter();
      return rk == 0 ? (k == 0 ? 1 : 0) : binomial(rk + k - 1, k);
    }
    case Kind::Wedge:
      return binomial(rank(e.children()[0], g), e.parameter());
  }
  return 0;
}

CohomologyTable cohomology_of_sum(const GrassmannData& g, const NormalForm& nf) {
  const auto list = nf.as_list();
  return cohomology_of_sum(g, std::span<const std::pair<HomogBundle, std::int64_t>>(list));
}

std::int64_t euler_char(const GrassmannData& g, const NormalForm& nf) {
  std::int64_t total = 0;
  for (const auto& [b, mult] : nf.terms()) total += mult * euler_char(g, b);
  return total;
}

}  // namespace flopcheck
