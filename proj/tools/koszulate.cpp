// koszulate: exact computations with Koszul modules W(V,K) and the divisor
// classes around them. See README.md for the file formats.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "koszul/engine.hpp"
#include "koszul/families.hpp"
#include "koszul/formulas.hpp"
#include "koszul/kfile.hpp"
#include "koszul/verify.hpp"

namespace {

using namespace koszul;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

std::uint64_t parse_prime_flag(const std::string& s) {
  if (s == "auto") return kDefaultPrime;
  Int p = parse_integer(s);
  if (p <= 0 || !p.fits_ulong_p())
    throw invalid_input("--prime out of range");
  return static_cast<std::uint64_t>(p.get_ui());
}

// Dispatch a generic command body over the field named in a KFile.
template <class Fn>
void with_kfile(const KFileData& kf, Fn&& fn) {
  if (kf.field.kind == FieldConfig::Kind::rational) {
    RationalField f;
    fn(subspace_from_kfile(kf, f));
  } else {
    PrimeField f(kf.field);
    fn(subspace_from_kfile(kf, f));
  }
}

void emit(const Report& rep, bool json) {
  std::cout << (json ? rep.to_json() : rep.to_text());
}

std::string class_entry(const FormalClass& c, const std::string& sym) {
  return rat_str(c.coefficient(sym));
}

void report_class(Report& rep, const FormalClass& c) {
  for (const auto& [sym, coeff] : c.terms())
    rep.results.emplace_back(sym, rat_str(coeff));
  if (c.terms().empty()) rep.results.emplace_back("zero", "true");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Koszul module computations"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit reports as JSON");

  int exit_code = 0;

  // ---- wq ----------------------------------------------------------------
  auto* wq = app.add_subcommand("wq", "dimension of one graded piece W_q");
  std::string wq_input, wq_route = "cohomology";
  Index wq_q = 0;
  bool wq_paranoid = false;
  wq->add_option("--input", wq_input, "KFile path")->required();
  wq->add_option("--q", wq_q, "degree q >= 0")->required();
  wq->add_option("--route", wq_route, "cohomology | presentation")
      ->check(CLI::IsMember({"cohomology", "presentation"}));
  wq->add_flag("--paranoid", wq_paranoid,
               "recompute the closed-form kernel rank as well");
  wq->callback([&] {
    Timer t;
    KFileData kf = kfile_read(wq_input);
    Report rep;
    rep.command = "wq";
    rep.inputs = {{"input", wq_input},
                  {"q", std::to_string(wq_q)},
                  {"route", wq_route}};
    with_kfile(kf, [&](const auto& k) {
      rep.field_label = k.field().config().label();
      Index d = wq_route == "presentation"
                    ? wq_dimension_presentation(k, wq_q)
                    : wq_dimension(k, wq_q, wq_paranoid);
      rep.results = {{"dim", std::to_string(d)}};
    });
    rep.timing_ms = t.ms();
    emit(rep, json);
  });

  // ---- hilbert -----------------------------------------------------------
  auto* hi = app.add_subcommand("hilbert", "dimensions W_0 .. W_qmax");
  std::string hi_input;
  Index hi_qmax = 0;
  bool hi_paranoid = false;
  hi->add_option("--input", hi_input, "KFile path")->required();
  hi->add_option("--qmax", hi_qmax, "last degree, inclusive")->required();
  hi->add_flag("--paranoid", hi_paranoid, "recompute closed-form ranks");
  hi->callback([&] {
    Timer t;
    KFileData kf = kfile_read(hi_input);
    Report rep;
    rep.command = "hilbert";
    rep.inputs = {{"input", hi_input}, {"qmax", std::to_string(hi_qmax)}};
    with_kfile(kf, [&](const auto& k) {
      rep.field_label = k.field().config().label();
      auto dims = hilbert_prefix(k, hi_qmax, hi_paranoid);
      for (Index q = 0; q <= hi_qmax; ++q)
        rep.results.emplace_back("W_" + std::to_string(q),
                                 std::to_string(dims[static_cast<std::size_t>(q)]));
    });
    rep.timing_ms = t.ms();
    emit(rep, json);
  });

  // ---- resonance ---------------------------------------------------------
  auto* re = app.add_subcommand("resonance",
                                "triviality verdict at the threshold degree");
  std::string re_input;
  bool re_paranoid = false;
  re->add_option("--input", re_input, "KFile path")->required();
  re->add_flag("--paranoid", re_paranoid, "recompute closed-form ranks");
  re->callback([&] {
    Timer t;
    KFileData kf = kfile_read(re_input);
    Report rep;
    rep.command = "resonance";
    rep.inputs = {{"input", re_input}};
    with_kfile(kf, [&](const auto& k) {
      rep.field_label = k.field().config().label();
      Index q = resonance_threshold(k.n());
      Index d = wq_dimension(k, q, re_paranoid);
      rep.results = {{"trivial", d == 0 ? "true" : "false"},
                     {"dim", std::to_string(d)},
                     {"q", std::to_string(q)}};
    });
    rep.timing_ms = t.ms();
    emit(rep, json);
  });

  // ---- points ------------------------------------------------------------
  auto* po = app.add_subcommand(
      "points", "count projective resonance points over a prime field");
  std::string po_input, po_prime;
  po->add_option("--input", po_input, "KFile path")->required();
  po->add_option("--prime", po_prime,
                 "decimal prime or 'auto'; required for rational KFiles");
  po->callback([&] {
    Timer t;
    KFileData kf = kfile_read(po_input);
    if (!po_prime.empty()) {
      std::uint64_t p = parse_prime_flag(po_prime);
      if (kf.field.kind == FieldConfig::Kind::prime && kf.field.p != p)
        throw invalid_input("--prime disagrees with the KFile field");
      kf.field = FieldConfig::prime(p);  // rational entries reduce mod p
    } else if (kf.field.kind != FieldConfig::Kind::prime) {
      throw invalid_input("points needs a prime field: pass --prime");
    }
    PrimeField f(kf.field);
    auto k = subspace_from_kfile(kf, f);
    Report rep;
    rep.command = "points";
    rep.inputs = {{"input", po_input}};
    rep.field_label = f.config().label();
    rep.results = {{"count", std::to_string(resonance_points_count(k))}};
    rep.timing_ms = t.ms();
    emit(rep, json);
  });

  // ---- isotropy ----------------------------------------------------------
  auto* iso = app.add_subcommand(
      "isotropy", "isotropy / separability of a subspace of the dual");
  std::string iso_input, iso_sub;
  iso->add_option("--input", iso_input, "KFile path")->required();
  iso->add_option("--subspace", iso_sub, "VFile path (rows of length n)")
      ->required();
  iso->callback([&] {
    Timer t;
    KFileData kf = kfile_read(iso_input);
    VFileData vf = vfile_read(iso_sub);
    Report rep;
    rep.command = "isotropy";
    rep.inputs = {{"input", iso_input}, {"subspace", iso_sub}};
    with_kfile(kf, [&](const auto& k) {
      rep.field_label = k.field().config().label();
      auto vbar = matrix_from_vfile(vf, k.field());
      bool a = is_isotropic(k, vbar);
      bool b = is_separable(k, vbar);
      rep.results = {{"isotropic", a ? "true" : "false"},
                     {"separable", b ? "true" : "false"},
                     {"strongly_isotropic", a && b ? "true" : "false"}};
    });
    rep.timing_ms = t.ms();
    emit(rep, json);
  });

  // ---- family ------------------------------------------------------------
  auto* fam = app.add_subcommand("family", "write a named subspace as a KFile");
  std::string fam_name, fam_out, fam_prime;
  Index fam_n = 0, fam_m = 0, fam_a = 0, fam_b = 0;
  std::uint64_t fam_seed = 1;
  fam->add_option("name", fam_name,
                  "random | codim-one | weyman | gaussian-rnc | split-p1 | "
                  "resonant-perturbation")
      ->required();
  fam->add_option("--n", fam_n, "dimension of V");
  fam->add_option("--m", fam_m, "dimension of K (random family)");
  fam->add_option("--a", fam_a, "first twist (split-p1)");
  fam->add_option("--b", fam_b, "second twist (split-p1)");
  fam->add_option("--seed", fam_seed, "seed for the random families");
  fam->add_option("--prime", fam_prime,
                  "decimal prime or 'auto'; omit for rational coefficients");
  fam->add_option("--out", fam_out, "output KFile path")->required();
  fam->callback([&] {
    Timer t;
    auto build = [&](auto f) {
      using F = decltype(f);
      Subspace2<F> k = [&]() -> Subspace2<F> {
        if (fam_name == "random") return random_subspace(fam_n, fam_m, f, fam_seed);
        if (fam_name == "codim-one") return codim_one(fam_n, f);
        if (fam_name == "weyman") return weyman(fam_n, f);
        if (fam_name == "gaussian-rnc") return gaussian_rnc(fam_n, f);
        if (fam_name == "split-p1") return split_bundle_p1(fam_a, fam_b, f);
        if (fam_name == "resonant-perturbation")
          return resonant_perturbation(fam_n, f, fam_seed);
        throw invalid_input("unknown family '" + fam_name + "'");
      }();
      kfile_write(fam_out, kfile_from_subspace(k));
      Report rep;
      rep.command = "family";
      rep.inputs = {{"name", fam_name}, {"out", fam_out}};
      rep.field_label = f.config().label();
      rep.results = {{"n", std::to_string(k.n())},
                     {"m", std::to_string(k.dim())}};
      rep.timing_ms = t.ms();
      emit(rep, json);
    };
    if (fam_prime.empty())
      build(RationalField{});
    else
      build(PrimeField(parse_prime_flag(fam_prime)));
  });

  // ---- degrees -----------------------------------------------------------
  auto* de = app.add_subcommand("degrees",
                                "divisor degrees on the Grassmannian of K");
  Index de_n = 0;
  de->add_option("--n", de_n, "dimension of V, n >= 3")->required();
  de->callback([&] {
    Timer t;
    Report rep;
    rep.command = "degrees";
    rep.inputs = {{"n", std::to_string(de_n)}};
    rep.field_label = "integer";
    rep.results = {{"koszul", koszul_divisor_degree(de_n).get_str()},
                   {"chow", chow_degree(de_n).get_str()},
                   {"identity", degree_identity(de_n) ? "true" : "false"}};
    rep.timing_ms = t.ms();
    emit(rep, json);
  });

  // ---- classes -----------------------------------------------------------
  auto* cl = app.add_subcommand("classes", "formal divisor classes");
  cl->require_subcommand(1);
  auto* cl_res = cl->add_subcommand("resonance-divisor",
                                    "closed-form class over c1E, c1F");
  Index cl_e = 0;
  cl_res->add_option("--e", cl_e, "e >= 3")->required();
  cl_res->callback([&] {
    Timer t;
    Report rep;
    rep.command = "classes resonance-divisor";
    rep.inputs = {{"e", std::to_string(cl_e)}};
    rep.field_label = "rational";
    report_class(rep, resonance_class(cl_e, FormalClass::symbol("c1E"),
                                      FormalClass::symbol("c1F")));
    rep.timing_ms = t.ms();
    emit(rep, json);
  });
  auto* cl_pen = cl->add_subcommand("canonical-pencil",
                                    "pencil-divisor class over lambda, sum_psi");
  Index cl_g = 0;
  cl_pen->add_option("--g", cl_g, "genus g >= 3")->required();
  cl_pen->callback([&] {
    Timer t;
    Report rep;
    rep.command = "classes canonical-pencil";
    rep.inputs = {{"g", std::to_string(cl_g)}};
    rep.field_label = "rational";
    report_class(rep, canonical_pencil_class(cl_g));
    rep.timing_ms = t.ms();
    emit(rep, json);
  });
  auto* cl_voi = cl->add_subcommand("voisin", "pure hhat class");
  Index cl_r = 0;
  cl_voi->add_option("--r", cl_r, "r >= 1")->required();
  cl_voi->callback([&] {
    Timer t;
    Report rep;
    rep.command = "classes voisin";
    rep.inputs = {{"r", std::to_string(cl_r)}};
    rep.field_label = "rational";
    rep.results = {{"hhat", class_entry(voisin_class(cl_r), "hhat")}};
    rep.timing_ms = t.ms();
    emit(rep, json);
  });

  // ---- mukai -------------------------------------------------------------
  auto* mu = app.add_subcommand("mukai", "Mukai vector arithmetic");
  mu->require_subcommand(1);
  auto* mu_pair = mu->add_subcommand("pair", "pairing of two vectors");
  Index mp_g = 0;
  std::vector<std::string> mp_v, mp_w;
  mu_pair->add_option("--g", mp_g, "genus of the polarization")->required();
  mu_pair->add_option("--v", mp_v, "first vector: r c s")
      ->expected(3)
      ->required();
  mu_pair->add_option("--w", mp_w, "second vector: r c s (default: v)")
      ->expected(3);
  mu_pair->callback([&] {
    Timer t;
    auto vec = [&](const std::vector<std::string>& c) {
      return MukaiVector{parse_integer(c[0]), parse_integer(c[1]),
                         parse_integer(c[2]), mp_g};
    };
    MukaiVector v = vec(mp_v);
    MukaiVector w = mp_w.empty() ? v : vec(mp_w);
    Report rep;
    rep.command = "mukai pair";
    rep.inputs = {{"g", std::to_string(mp_g)}};
    rep.field_label = "integer";
    rep.results = {{"pairing", mukai_pairing(v, w).get_str()}};
    rep.timing_ms = t.ms();
    emit(rep, json);
  });
  auto* mu_sym = mu->add_subcommand("sym", "Mukai vector of Sym^b");
  Index ms_r = 0, ms_s = 0, ms_g = 0, ms_b = 0;
  bool ms_sph = false;
  mu_sym->add_option("--r", ms_r, "rank, r >= 1")->required();
  mu_sym->add_option("--s", ms_s, "Euler component of the input vector")
      ->required();
  mu_sym->add_option("--g", ms_g, "genus")->required();
  mu_sym->add_option("--b", ms_b, "symmetric power, b >= 0")->required();
  mu_sym->add_flag("--spherical", ms_sph, "use the g = r*s shortcut");
  mu_sym->callback([&] {
    Timer t;
    MukaiVector v = sym_mukai(ms_r, ms_s, ms_g, ms_b, ms_sph);
    Report rep;
    rep.command = "mukai sym";
    rep.inputs = {{"r", std::to_string(ms_r)},
                  {"s", std::to_string(ms_s)},
                  {"g", std::to_string(ms_g)},
                  {"b", std::to_string(ms_b)},
                  {"spherical", ms_sph ? "true" : "false"}};
    rep.field_label = "integer";
    rep.results = {{"r", v.r.get_str()},
                   {"c", v.c.get_str()},
                   {"s", v.s.get_str()}};
    rep.timing_ms = t.ms();
    emit(rep, json);
  });
  auto* mu_h1 = mu->add_subcommand("h1", "h^1 of Sym^b of the pencil bundle");
  Index mh_r = 0, mh_b = 0;
  mu_h1->add_option("--r", mh_r, "rank, r >= 1")->required();
  mu_h1->add_option("--b", mh_b, "symmetric power, b >= 1")->required();
  mu_h1->callback([&] {
    Timer t;
    Report rep;
    rep.command = "mukai h1";
    rep.inputs = {{"r", std::to_string(mh_r)}, {"b", std::to_string(mh_b)}};
    rep.field_label = "integer";
    rep.results = {{"h1", h1_sym_dim(mh_r, mh_b).get_str()}};
    rep.timing_ms = t.ms();
    emit(rep, json);
  });

  // ---- verify ------------------------------------------------------------
  auto* ve = app.add_subcommand("verify", "run the self-verification suite");
  std::string ve_level = "fast";
  ve->add_option("--level", ve_level, "fast | full")
      ->check(CLI::IsMember({"fast", "full"}));
  ve->callback([&] {
    Timer t;
    auto results = run_verification(ve_level == "full" ? VerifyLevel::full
                                                       : VerifyLevel::fast);
    Report rep;
    rep.command = "verify";
    rep.inputs = {{"level", ve_level}};
    rep.field_label = "mixed";
    for (const auto& r : results) {
      std::string line = (r.passed ? "pass" : "FAIL") + std::string(": ") +
                         r.title + " (" + r.detail + ", " +
                         std::to_string(r.ms) + " ms)";
      rep.results.emplace_back(r.id, line);
    }
    rep.timing_ms = t.ms();
    emit(rep, json);
    if (!all_passed(results)) exit_code = 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
