// Command-line front end for the flopcheck engine.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flopcheck/bott.hpp"
#include "flopcheck/bundle.hpp"
#include "flopcheck/errors.hpp"
#include "flopcheck/functor.hpp"
#include "flopcheck/lattice.hpp"
#include "flopcheck/report.hpp"
#include "flopcheck/total_space.hpp"

using namespace flopcheck;
using nlohmann::json;

namespace {

struct Globals {
  int r = 2;
  int n = 4;
  int cutoff = kDefaultCutoff;
  std::string format = "text";
  std::string output;
};

/// A command's result: text for humans, JSON for machines.
struct Result {
  std::string text;
  json data;
};

std::string str(std::int64_t v) { return std::to_string(v); }

std::pair<int, int> pair_arg(const std::vector<int>& v, const char* what) {
  if (v.size() != 2) throw ParseError(std::string(what) + " expects two comma-separated integers");
  return {v[0], v[1]};
}

json cohomology_json(const CohomologyResult& h) {
  if (!h) return {{"zero", true}};
  return {{"zero", false}, {"degree", str(h->degree)}, {"rep", h->rep.to_string()}, {"dim", str(h->dim)}};
}

json table_json(const CohomologyTable& t) {
  json out = json::object();
  for (const auto& [p, d] : t) out[str(p)] = str(d);
  return out;
}

std::string table_text(const CohomologyTable& t) {
  if (t.empty()) return "all cohomology vanishes";
  std::string out;
  for (const auto& [p, d] : t) out += (out.empty() ? "" : ", ") + ("h^" + str(p) + " = " + str(d));
  return out;
}

Result cmd_cohomology(const GrassmannData& g, const std::vector<int>& mu, const std::vector<int>& lambda) {
  const HomogBundle b{GLWeight(mu), GLWeight(lambda)};
  const auto h = bott_cohomology(g, b);
  std::string text = g.to_string() + " " + b.to_string() + ": ";
  text += h ? "degree " + str(h->degree) + ", rep (" + h->rep.to_string() + "), dim " + str(h->dim)
            : "all cohomology vanishes";
  return {text + "\n", {{"grassmannian", g.to_string()}, {"bundle", b.to_string()}, {"cohomology", cohomology_json(h)}}};
}

Result cmd_euler(const GrassmannData& g, const std::string& expr) {
  const BundleExpr e = BundleExpr::parse(expr);
  const NormalForm nf = normalize(e, g);
  const std::int64_t chi = euler_char(g, nf);
  return {"chi(" + g.to_string() + ", " + e.to_string() + ") = " + str(chi) + "\n",
          {{"grassmannian", g.to_string()}, {"expr", e.to_string()}, {"euler_char", str(chi)}}};
}

Result cmd_normalize(const GrassmannData& g, const std::string& expr) {
  const BundleExpr e = BundleExpr::parse(expr);
  const NormalForm nf = normalize(e, g);
  const CohomologyTable t = cohomology_of_sum(g, nf);
  json terms = json::array();
  std::string text = e.to_string() + " on " + g.to_string() + " (" + to_string(nf.exactness()) + ")\n";
  for (const auto& [b, mult] : nf.as_list()) {
    const auto h = bott_cohomology(g, b);
    terms.push_back({{"bundle", b.to_string()}, {"multiplicity", str(mult)}, {"rank", str(b.rank())},
                     {"cohomology", cohomology_json(h)}});
    text += "  " + (mult == 1 ? std::string() : str(mult) + " x ") + b.to_string() + "  rank " + str(b.rank()) + "\n";
  }
  text += "rank " + str(nf.rank()) + "; " + table_text(t) + "\n";
  return {text,
          {{"grassmannian", g.to_string()},
           {"expr", e.to_string()},
           {"exactness", to_string(nf.exactness())},
           {"rank", str(nf.rank())},
           {"terms", terms},
           {"cohomology", table_json(t)}}};
}

Result cmd_graded_hom(const GrassmannData& g, const std::string& a, const std::string& b, const std::string& model,
                      int cutoff) {
  const TotalSpaceKind kind = model == "cotangent" ? TotalSpaceKind::Cotangent : TotalSpaceKind::ExtendedCotangent;
  const TotalSpaceModel m{g, kind};
  const GradedExtTable t = graded_hom(BundleExpr::parse(a), BundleExpr::parse(b), m, cutoff);
  return {"Hom^p(" + a + ", " + b + ") on " + to_string(kind) + " over " + g.to_string() + "\n" + t.to_text(),
          {{"grassmannian", g.to_string()}, {"model", to_string(kind)}, {"table", t.to_json()}}};
}

Result cmd_gram(const GrassmannData& g) {
  const auto gens = spanning_generator_indices(g.n());
  const GramResult gram = spanning_gram(g, gens);
  std::string text = "generators Sym^i S^* ⊗ O(j) on " + g.to_string() + ":";
  json labels = json::array();
  for (auto [i, j] : gens) {
    text += " (" + str(i) + "," + str(j) + ")";
    labels.push_back(str(i) + "," + str(j));
  }
  text += "\n";
  json matrix = json::array();
  for (const auto& row : gram.matrix) {
    json r = json::array();
    for (std::size_t c = 0; c < row.size(); ++c) {
      text += (c ? " " : "  ") + str(row[c]);
      r.push_back(str(row[c]));
    }
    text += "\n";
    matrix.push_back(r);
  }
  text += "determinant " + gram.determinant.str() + "\n";
  return {text, {{"generators", labels}, {"matrix", matrix}, {"determinant", gram.determinant.str()}}};
}

Result cmd_intersection(int n) {
  const auto e1 = DivClassY::exceptional1();
  const auto e2 = DivClassY::exceptional2();
  const auto l1 = CurveClassY::l1();
  const auto l2 = CurveClassY::l2();
  const auto k = canonical_coefficients(n);
  const auto pic = picard_relation_check();
  std::ostringstream text;
  text << "        l1'  l2\n";
  text << "E1'     " << to_string(pair(e1, l1)) << "   " << to_string(pair(e1, l2)) << "\n";
  text << "E2       " << to_string(pair(e2, l1)) << "  " << to_string(pair(e2, l2)) << "\n";
  text << "K_Y = f^*K_X + " << k.first << "E1' + " << k.second << "E2 (n = " << n << ")\n";
  text << "f+^*O_X+(1) = " << pic.plus_hyperplane.to_string() << "\n";
  return {text.str(),
          {{"pairings",
            {{"E1'.l1'", to_string(pair(e1, l1))},
             {"E1'.l2", to_string(pair(e1, l2))},
             {"E2.l1'", to_string(pair(e2, l1))},
             {"E2.l2", to_string(pair(e2, l2))}}},
           {"canonical", {{"n", str(n)}, {"E1'", str(k.first)}, {"E2", str(k.second)}}},
           {"plus_hyperplane", pic.plus_hyperplane.to_string()}}};
}

Result cmd_dims(int r, int n) {
  const auto d = flop_dimensions(r, n);
  return {"dim G = " + str(d.dim_G) + ", dim X0 = " + str(d.dim_X0) + ", dim X = " + str(d.dim_X) + ", dim W = " +
              str(d.dim_W) + "\n",
          {{"r", str(r)}, {"n", str(n)}, {"dim_G", str(d.dim_G)}, {"dim_X0", str(d.dim_X0)}, {"dim_X", str(d.dim_X)},
           {"dim_W", str(d.dim_W)}}};
}

Result cmd_functor_table(int r, int n, int l) {
  if (r == 1) {
    const auto t = r1_functor_table(l, n);
    std::string text = "Phi_" + str(l) + " on P^" + str(n - 1) + " flop (blow-up codim " + str(t.blowup_codim) + ")\n";
    json rows = json::array();
    for (const auto& e : t.entries) {
      text += "  O_X(" + str(e.k) + ") -> O_X+(" + str(e.plus_twist) + ")  exceptional twists " +
              str(e.phi_exceptional) + ", " + str(e.psi_exceptional) + "\n";
      rows.push_back({{"k", str(e.k)}, {"plus_twist", str(e.plus_twist)}, {"phi_e", str(e.phi_exceptional)},
                      {"psi_e", str(e.psi_exceptional)}});
    }
    return {text, {{"r", "1"}, {"l", str(l)}, {"n", str(n)}, {"roundtrips", t.roundtrips()}, {"entries", rows}}};
  }
  if (r != 2) throw DomainError("functor-table covers r = 1 and r = 2");
  std::string text;
  json rows = json::array();
  for (const auto& g : spanning_generators(n)) {
    const ImageSheaf im = phi_image(g);
    text += "  " + g.to_string() + " -> " + to_string(im) + "\n";
    rows.push_back({{"source", g.to_json()}, {"image", to_json(im)}});
  }
  return {text, {{"r", "2"}, {"n", str(n)}, {"entries", rows}}};
}

Result cmd_roundtrip(int n) {
  const auto rt = roundtrip_check(n);
  std::string text;
  json rows = json::array();
  for (const auto& s : rt.steps) {
    text += std::string(s.ok ? "  ok   " : "  FAIL ") + s.source.to_string() + " -> " + to_string(s.image) + " -> " +
            (s.back ? s.back->to_string() : "(no inverse)") + "\n";
    rows.push_back({{"source", s.source.to_json()},
                    {"image", to_json(s.image)},
                    {"back", s.back ? s.back->to_json() : json()},
                    {"ok", s.ok}});
  }
  text += rt.all_ok ? "all generators return\n" : "round trip incomplete\n";
  return {text, {{"n", str(n)}, {"all_ok", rt.all_ok}, {"images_distinct", rt.images_distinct}, {"steps", rows}}};
}

Result cmd_eagon_northcott(int n) {
  const auto en = eagon_northcott(n);
  std::string text;
  json terms = json::array();
  for (const auto& t : en.terms) {
    text += std::string(t.sign > 0 ? "  + " : "  - ") + t.description + "  rank " + str(t.rank) + "\n";
    terms.push_back({{"description", t.description}, {"bundle", t.bundle.to_string()}, {"rank", str(t.rank)},
                     {"sign", str(t.sign)}});
  }
  text += "  resolves " + en.resolved + "; signed rank sum " + str(en.signed_rank_sum()) + "\n";
  return {text,
          {{"n", str(n)}, {"terms", terms}, {"resolved", en.resolved}, {"signed_rank_sum", str(en.signed_rank_sum())}}};
}

Result cmd_filtration(int i) {
  const auto ladder = filtration_ladder(i);
  std::string text = ladder.top + " = F^{0,0}\n";
  json steps = json::array();
  for (const auto& s : ladder.steps) {
    text += "  F^{" + str(s.k) + "," + str(s.l) + "}/next = " + s.quotient + "\n";
    steps.push_back({{"k", str(s.k)}, {"l", str(s.l)}, {"quotient", s.quotient}});
  }
  text += "F^{" + str(i) + ",0} = " + ladder.bottom + "\n";
  return {text, {{"i", str(i)}, {"top", ladder.top}, {"bottom", ladder.bottom}, {"steps", steps}}};
}

Result cmd_hom_compare(int n, std::pair<int, int> a, std::pair<int, int> b, int cutoff) {
  const auto cmp = hom_compare(GeneratorSheaf(a.first, a.second, n), GeneratorSheaf(b.first, b.second, n), cutoff);
  std::string text = "Hom(" + cmp.g1.to_string() + ", " + cmp.g2.to_string() + ") on X\n" + cmp.minus_side.to_text();
  text += "Hom(Phi, Phi) on X+\n" + cmp.plus_side.to_text();
  for (const auto& s : cmp.shifts) {
    text += "p=" + str(s.p) + ": " + (s.identical ? "identical" : "differ");
    text += s.shift ? ", shift " + str(*s.shift) + " over " + str(s.overlap) + " weights\n" : ", no shift found\n";
  }
  return {text, cmp.to_json()};
}

void emit(const Globals& gl, const std::string& body) {
  if (gl.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(gl.output, std::ios::binary);
  if (!out) throw DomainError("cannot write " + gl.output);
  out << body;
}

std::string render(const Globals& gl, const Result& r) {
  return gl.format == "json" ? r.data.dump(2) + "\n" : r.text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology and flop bookkeeping on Grassmannians", "flopcheck"};
  app.set_version_flag("--version", FLOPCHECK_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Globals gl;
  app.add_option("--r", gl.r, "subspace dimension r")->capture_default_str();
  app.add_option("--n", gl.n, "ambient dimension n")->capture_default_str();
  app.add_option("--cutoff", gl.cutoff, "largest Sym-weight computed")
      ->envname("FLOPCHECK_CUTOFF")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--format", gl.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--output", gl.output, "write to this file instead of stdout");

  std::vector<int> g_arg;
  std::vector<int> mu;
  std::vector<int> lambda;
  std::string expr;
  std::string a_expr = "O";
  std::string b_expr = "O";
  std::string model = "extended";
  int l = 0;
  int i = 1;
  std::vector<int> g1 = {0, 0};
  std::vector<int> g2 = {0, 0};

  auto* cohomology = app.add_subcommand("cohomology", "Bott cohomology of Sigma_mu Q ⊗ Sigma_lambda S");
  cohomology->add_option("--g", g_arg, "Grassmannian as r,n (default --r, --n)")->delimiter(',')->expected(2);
  cohomology->add_option("--mu", mu, "weight on Q, length n - r")->delimiter(',')->required();
  cohomology->add_option("--lambda", lambda, "weight on S, length r")->delimiter(',')->required();

  auto* euler = app.add_subcommand("euler", "Euler characteristic of a bundle expression");
  euler->add_option("--expr", expr, "bundle expression")->required();

  auto* norm = app.add_subcommand("normalize", "decompose a bundle expression into irreducibles");
  norm->add_option("--expr", expr, "bundle expression")->required();

  auto* ghom = app.add_subcommand("graded-hom", "graded Hom^p(pi^*a, pi^*b) on a total space");
  ghom->add_option("--a", a_expr, "source bundle")->capture_default_str();
  ghom->add_option("--b", b_expr, "target bundle")->capture_default_str();
  ghom->add_option("--model", model, "total space")
      ->check(CLI::IsMember({"cotangent", "extended"}))
      ->capture_default_str();

  auto* gram = app.add_subcommand("gram", "Euler Gram matrix of the spanning generators on G(2,n)");
  auto* inter = app.add_subcommand("intersection", "intersection table and discrepancies of the blow-up");
  auto* dims = app.add_subcommand("dims", "dimensions of G, X0, X and W");

  auto* ftable = app.add_subcommand("functor-table", "images of the generators under Phi");
  ftable->add_option("--l", l, "index of Phi_l when r = 1")->capture_default_str();

  auto* rtrip = app.add_subcommand("roundtrip", "Psi(Phi(w)) for every generator");
  auto* en = app.add_subcommand("eagon-northcott", "terms of the Eagon-Northcott complex");

  auto* filt = app.add_subcommand("filtration", "filtration of f^*Sym^i S^*");
  filt->add_option("--i", i, "symmetric power")->capture_default_str();

  auto* hcmp = app.add_subcommand("hom-compare", "graded Hom across the flop");
  hcmp->add_option("--g1", g1, "first generator as i,j")->delimiter(',')->expected(2)->capture_default_str();
  hcmp->add_option("--g2", g2, "second generator as i,j")->delimiter(',')->expected(2)->capture_default_str();

  auto* verify = app.add_subcommand("verify-all", "run every verification check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code != 0) std::cerr << app.help();
    return code;
  }

  try {
    auto grassmannian = [&]() {
      if (!g_arg.empty()) {
        const auto [r, n] = pair_arg(g_arg, "--g");
        return GrassmannData(r, n);
      }
      return GrassmannData(gl.r, gl.n);
    };

    if (verify->parsed()) {
      const VerificationReport rep = verify_all({gl.r, gl.n, gl.cutoff});
      emit(gl, format_report(rep, gl.format == "json" ? ReportFormat::Json : ReportFormat::Text));
      return rep.has_failures() ? 1 : 0;
    }

    Result result;
    if (cohomology->parsed()) {
      result = cmd_cohomology(grassmannian(), mu, lambda);
    } else if (euler->parsed()) {
      result = cmd_euler(grassmannian(), expr);
    } else if (norm->parsed()) {
      result = cmd_normalize(grassmannian(), expr);
    } else if (ghom->parsed()) {
      result = cmd_graded_hom(grassmannian(), a_expr, b_expr, model, gl.cutoff);
    } else if (gram->parsed()) {
      result = cmd_gram(GrassmannData(gl.r, gl.n));
    } else if (inter->parsed()) {
      result = cmd_intersection(gl.n);
    } else if (dims->parsed()) {
      result = cmd_dims(gl.r, gl.n);
    } else if (ftable->parsed()) {
      result = cmd_functor_table(gl.r, gl.n, l);
    } else if (rtrip->parsed()) {
      result = cmd_roundtrip(gl.n);
    } else if (en->parsed()) {
      result = cmd_eagon_northcott(gl.n);
    } else if (filt->parsed()) {
      result = cmd_filtration(i);
    } else if (hcmp->parsed()) {
      result = cmd_hom_compare(gl.n, pair_arg(g1, "--g1"), pair_arg(g2, "--g2"), gl.cutoff);
    }
    emit(gl, render(gl, result));
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
