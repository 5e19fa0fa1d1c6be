#include "koszul/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "koszul/engine.hpp"
#include "koszul/families.hpp"
#include "koszul/formulas.hpp"

namespace koszul {
namespace {

struct Check {
  bool ok = true;
  int done = 0;
  std::string first_failure;

  void expect(bool cond, const std::function<std::string()>& describe) {
    ++done;
    if (!cond && ok) {
      ok = false;
      first_failure = describe();
    }
  }
  void expect(bool cond, const std::string& msg) {
    expect(cond, [&] { return msg; });
  }
  std::string detail() const {
    if (ok) return std::to_string(done) + " checks";
    return first_failure;
  }
};

// Reduction of a rational subspace to F_p along the same basis rows; throws
// when a row collapses (never for small integer entries and a 61-bit prime).
Subspace2<PrimeField> reduce_mod_p(const Subspace2<RationalField>& k,
                                   const PrimeField& fp) {
  TripletBuilder<PrimeField> tb;
  for (Index r = 0; r < k.dim(); ++r)
    for (const auto& e : k.basis().row(r)) {
      auto num = fp.from_mpz(Int(e.val.get_num()));
      auto den = fp.from_mpz(Int(e.val.get_den()));
      auto v = fp.div(num, den);
      if (v != 0) tb.add(r, e.col, v);
    }
  return Subspace2<PrimeField>(fp, k.n(),
                               tb.build(fp, k.dim(), k.ambient_dim()));
}

std::string dims_str(const std::vector<Index>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// C01: W_q = 0 at q = n-3, n-2 for the transvectant and derivative-pairing
// families; rationals for n <= 5, the 61-bit prime field above.
Check c01(VerifyLevel level) {
  Check ck;
  const Index n_hi = level == VerifyLevel::full ? 7 : 5;
  for (Index n = 4; n <= n_hi; ++n) {
    auto run = [&](auto field) {
      using F = decltype(field);
      const Subspace2<F> ks[] = {weyman(n, field), gaussian_rnc(n, field)};
      const char* names[] = {"weyman", "gaussian_rnc"};
      for (int i = 0; i < 2; ++i)
        for (Index q = n - 3; q <= n - 2; ++q) {
          Index d = wq_dimension(ks[i], q);
          ck.expect(d == 0, [&] {
            return std::string(names[i]) + "(" + std::to_string(n) +
                   "): dim W_" + std::to_string(q) + " = " +
                   std::to_string(d) + ", expected 0";
          });
        }
    };
    if (n <= 5)
      run(RationalField{});
    else
      run(PrimeField(kDefaultPrime));
  }
  return ck;
}

// C02: random K with dim 2n-3 and certified-trivial resonance attains the
// sharp bound in every degree below the threshold. Triviality of a rational
// sample is certified by vanishing after reduction mod a large prime
// (the mod-p dimension is an upper bound for the rational one).
Check c02(VerifyLevel level) {
  Check ck;
  const Index n_hi = level == VerifyLevel::full ? 6 : 5;
  const int wanted = level == VerifyLevel::full ? 10 : 3;
  const PrimeField fp(kDefaultPrime);
  const RationalField fq;
  for (Index n = 4; n <= n_hi; ++n) {
    int qualified = 0;
    for (std::uint64_t seed = 1; seed <= 200 && qualified < wanted; ++seed) {
      auto k = random_subspace(n, 2 * n - 3, fq, seed);
      if (wq_dimension(reduce_mod_p(k, fp), resonance_threshold(n)) != 0)
        continue;  // not certified trivial: resample
      ++qualified;
      for (Index q = 0; q + 4 <= n; ++q) {
        Index d = wq_dimension(k, q);
        Int b = wq_bound(n, q);
        ck.expect(Int(d) == b, [&] {
          return "n=" + std::to_string(n) + " seed=" + std::to_string(seed) +
                 ": dim W_" + std::to_string(q) + " = " + std::to_string(d) +
                 " != bound " + b.get_str();
        });
      }
    }
    ck.expect(qualified == wanted, [&] {
      return "n=" + std::to_string(n) + ": only " + std::to_string(qualified) +
             " trivial samples in 200 seeds";
    });
  }
  return ck;
}

// C03: hilbert_prefix(codim_one(n), n) == [1, 2, ..., n+1].
Check c03(VerifyLevel level) {
  Check ck;
  const Index n_hi = level == VerifyLevel::full ? 6 : 5;
  const RationalField fq;
  for (Index n = 4; n <= n_hi; ++n) {
    auto dims = hilbert_prefix(codim_one(n, fq), n);
    std::vector<Index> want;
    for (Index q = 0; q <= n; ++q) want.push_back(q + 1);
    ck.expect(dims == want, [&] {
      return "codim_one(" + std::to_string(n) + "): prefix " + dims_str(dims) +
             " != " + dims_str(want);
    });
  }
  return ck;
}

// C04: perturbed-resonant samples obey the multiplicity lower bound
// dim W_{n-3} >= n-2.
Check c04(VerifyLevel level) {
  Check ck;
  const Index n_hi = level == VerifyLevel::full ? 5 : 4;
  const int seeds = level == VerifyLevel::full ? 10 : 3;
  const RationalField fq;
  for (Index n = 4; n <= n_hi; ++n)
    for (std::uint64_t seed = 1; seed <= static_cast<std::uint64_t>(seeds);
         ++seed) {
      auto k = resonant_perturbation(n, fq, seed);
      Index d = wq_dimension(k, resonance_threshold(n));
      ck.expect(d >= n - 2, [&] {
        return "n=" + std::to_string(n) + " seed=" + std::to_string(seed) +
               ": dim W_" + std::to_string(n - 3) + " = " + std::to_string(d) +
               " < " + std::to_string(n - 2);
      });
    }
  return ck;
}

// C05: the algebraic triviality verdict agrees with exhaustive projective
// point enumeration, on 10 resonant and 10 non-resonant samples per (n, p).
// Resonant samples come from the perturbation family (they carry a rational
// witness point by construction); non-resonant ones are the first random
//2n-3 dimensional samples whose module vanishes at the threshold.
Check c05(VerifyLevel level) {
  Check ck;
  const std::vector<Index> ns =
      level == VerifyLevel::full ? std::vector<Index>{4, 5}
                                 : std::vector<Index>{4};
  const std::vector<std::uint64_t> ps =
      level == VerifyLevel::full ? std::vector<std::uint64_t>{3, 5, 7}
                                 : std::vector<std::uint64_t>{3};
  const int pool = level == VerifyLevel::full ? 10 : 3;
  for (Index n : ns)
    for (std::uint64_t p : ps) {
      PrimeField fp(p);
      for (std::uint64_t seed = 1; seed <= static_cast<std::uint64_t>(pool);
           ++seed) {
        auto k = resonant_perturbation(n, fp, seed);
        bool trivial = resonance_trivial(k);
        Index count = resonance_points_count(k);
        ck.expect(!trivial && count > 0, [&] {
          return "resonant n=" + std::to_string(n) + " p=" + std::to_string(p) +
                 " seed=" + std::to_string(seed) + ": trivial=" +
                 (trivial ? "true" : "false") +
                 " count=" + std::to_string(count);
        });
      }
      int found = 0;
      for (std::uint64_t seed = 1; seed <= 5000 && found < pool; ++seed) {
        auto k = random_subspace(n, 2 * n - 3, fp, seed);
        if (!resonance_trivial(k)) continue;
        ++found;
        Index count = resonance_points_count(k);
        ck.expect(count == 0, [&] {
          return "trivial n=" + std::to_string(n) + " p=" + std::to_string(p) +
                 " seed=" + std::to_string(seed) + ": count = " +
                 std::to_string(count) + " != 0";
        });
      }
      ck.expect(found == pool, [&] {
        return "n=" + std::to_string(n) + " p=" + std::to_string(p) +
               ": only " + std::to_string(found) + " trivial samples found";
      });
    }
  return ck;
}

// C06: the O(1)+O(1) family has exactly (p+1)^2 resonance points over F_p.
Check c06(VerifyLevel level) {
  Check ck;
  const std::vector<std::uint64_t> ps =
      level == VerifyLevel::full ? std::vector<std::uint64_t>{3, 5, 7}
                                 : std::vector<std::uint64_t>{3};
  for (std::uint64_t p : ps) {
    PrimeField fp(p);
    Index count = resonance_points_count(split_bundle_p1(1, 1, fp));
    Index want = static_cast<Index>((p + 1) * (p + 1));
    ck.expect(count == want, [&] {
      return "p=" + std::to_string(p) + ": count " + std::to_string(count) +
             " != " + std::to_string(want);
    });
  }
  return ck;
}

// C07: binomial(2n-4, n-1) == (n-2) * Catalan(n-2) for 3 <= n <= 60.
Check c07(VerifyLevel) {
  Check ck;
  for (Index n = 3; n <= 60; ++n)
    ck.expect(degree_identity(n), [&] {
      return "degree identity fails at n=" + std::to_string(n) + ": " +
             koszul_divisor_degree(n).get_str() + " vs (n-2)*" +
             chow_degree(n).get_str();
    });
  ck.expect(koszul_divisor_degree(6) == 56, "koszul degree at n=6 is not 56");
  ck.expect(chow_degree(6) == 14, "chow degree at n=6 is not 14");
  return ck;
}

// C08: the five-term expanded derivation of the divisor class equals the
// closed form, 4 <= e <= 40.
Check c08(VerifyLevel) {
  Check ck;
  const auto c1E = FormalClass::symbol("c1E");
  const auto c1F = FormalClass::symbol("c1F");
  for (Index e = 4; e <= 40; ++e) {
    auto lhs = resonance_class_from_proof(e, c1E, c1F);
    auto rhs = resonance_class(e, c1E, c1F);
    ck.expect(lhs == rhs, [&] {
      return "e=" + std::to_string(e) + ": " + lhs.str() + " != " + rhs.str();
    });
  }
  return ck;
}

// C09: the canonical-pencil class is the divisor class evaluated at
// c1E = lambda, c1F = 3*sum_psi, for 3 <= g <= 30.
Check c09(VerifyLevel) {
  Check ck;
  const auto lambda = FormalClass::symbol("lambda");
  const auto f3psi = FormalClass::symbol("sum_psi", Rat(3));
  for (Index g = 3; g <= 30; ++g) {
    auto lhs = canonical_pencil_class(g);
    auto rhs = resonance_class(g, lambda, f3psi);
    ck.expect(lhs == rhs, [&] {
      return "g=" + std::to_string(g) + ": " + lhs.str() + " != " + rhs.str();
    });
  }
  return ck;
}

// C10: the divisor class at e = r+2 with inputs c1E = (3r+2)/2 phi - psi/2,
// c1F = (2r+1) phi, rewritten in hhat = psi - 2r phi, is the pure hhat
// class with coefficient (2r+1)!/(r!(r+2)!), for 2 <= r <= 30.
Check c10(VerifyLevel) {
  Check ck;
  const auto phi = FormalClass::symbol("phi");
  const auto psi = FormalClass::symbol("psi");
  for (Index r = 2; r <= 30; ++r) {
    Rat ephi(3 * static_cast<long>(r) + 2, 2);
    ephi.canonicalize();
    auto c1E = ephi * phi - Rat(1, 2) * psi;
    auto c1F = Rat(2 * static_cast<long>(r) + 1) * phi;
    auto cls = rewrite_in_hhat(resonance_class(r + 2, c1E, c1F), r);
    ck.expect(cls == voisin_class(r), [&] {
      return "r=" + std::to_string(r) + ": " + cls.str() + " != " +
             voisin_class(r).str();
    });
    ck.expect(sgn(cls.coefficient("phi")) == 0,
              "r=" + std::to_string(r) + ": phi coefficient survives");
    ck.expect(cls.coefficient("hhat") == voisin_coefficient(r),
              "r=" + std::to_string(r) + ": hhat coefficient mismatch");
  }
  return ck;
}

// C11: h^1 of the symmetric powers equals the sharp bound wq_bound(r+2, b-2)
// for r <= 20, 2 <= b <= r+3.
Check c11(VerifyLevel) {
  Check ck;
  for (Index r = 2; r <= 20; ++r)
    for (Index b = 2; b <= r + 3; ++b) {
      Int lhs = h1_sym_dim(r, b);
      Int rhs = wq_bound(r + 2, b - 2);
      ck.expect(lhs == rhs, [&] {
        return "r=" + std::to_string(r) + " b=" + std::to_string(b) + ": " +
               lhs.get_str() + " != " + rhs.get_str();
      });
    }
  return ck;
}

// C12: Mukai arithmetic: (r, L, 2) at g = 2r is spherical (v^2 = -2);
// Sym^1 is the identity; general and spherical third components agree on
// g = rs.
Check c12(VerifyLevel) {
  Check ck;
  for (Index r = 2; r <= 20; ++r) {
    MukaiVector v{Int(static_cast<long>(r)), Int(1), Int(2), 2 * r};
    Int sq = mukai_pairing(v, v);
    ck.expect(sq == -2, [&] {
      return "r=" + std::to_string(r) + ": v.v = " + sq.get_str() + " != -2";
    });
  }
  for (Index r = 1; r <= 6; ++r)
    for (Index s = 1; s <= 6; ++s)
      for (Index g : {2 * r, r * s, r + s, Index(7)}) {
        MukaiVector got = sym_mukai(r, s, g, 1, false);
        MukaiVector want{Int(static_cast<long>(r)), Int(1),
                         Int(static_cast<long>(s)), g};
        ck.expect(got == want, [&] {
          return "sym b=1 not identity at r=" + std::to_string(r) +
                 " s=" + std::to_string(s) + " g=" + std::to_string(g);
        });
      }
  for (Index r = 1; r <= 6; ++r)
    for (Index s = 1; s <= 6; ++s)
      for (Index b = 0; b <= 6; ++b) {
        MukaiVector gen = sym_mukai(r, s, r * s, b, false);
        MukaiVector sph = sym_mukai(r, s, r * s, b, true);
        ck.expect(gen == sph, [&] {
          return "general/spherical split at r=" + std::to_string(r) +
                 " s=" + std::to_string(s) + " b=" + std::to_string(b);
        });
      }
  return ck;
}

// C13: structural invariants of the computation itself.
Check c13(VerifyLevel level) {
  Check ck;
  const RationalField fq;
  const PrimeField fp(kDefaultPrime);
  const Index n_hi = level == VerifyLevel::full ? 6 : 4;
  const Index q_hi = level == VerifyLevel::full ? 4 : 2;

  // delta o delta = 0, both adjacent compositions of the full differential.
  for (Index n = 2; n <= n_hi; ++n)
    for (Index q = 0; q <= q_hi; ++q) {
      auto z1 = multiply(delta_matrix(1, q + 1, n, fq),
                         delta_matrix(2, q, n, fq));
      ck.expect(z1.nnz() == 0,
                "complex property violated at p=2, n=" + std::to_string(n) +
                    ", q=" + std::to_string(q));
      if (n >= 3) {
        auto z2 = multiply(delta_matrix(2, q + 1, n, fq),
                           delta_matrix(3, q, n, fq));
        ck.expect(z2.nnz() == 0,
                  "complex property violated at p=3, n=" + std::to_string(n) +
                      ", q=" + std::to_string(q));
      }
    }

  // Cohomology route and presentation route agree on random instances over
  // both kinds of field, and W_0 always has dimension binomial(n,2) - m.
  const int instances = level == VerifyLevel::full ? 50 : 10;
  SplitMix64 rng(20240917);
  for (int i = 0; i < instances; ++i) {
    Index n = static_cast<Index>(rng.in_range(3, 5));
    Index pairs = n * (n - 1) / 2;
    Index m = static_cast<Index>(rng.in_range(1, pairs - 1));
    Index q = static_cast<Index>(rng.in_range(0, 3));
    std::uint64_t seed = rng.next();
    auto check_instance = [&](auto field) {
      auto k = random_subspace(n, m, field, seed);
      Index a = wq_dimension(k, q);
      Index b = wq_dimension_presentation(k, q);
      ck.expect(a == b, [&] {
        return "route disagreement " + std::to_string(a) + " vs " +
               std::to_string(b) + " at n=" + std::to_string(n) +
               " m=" + std::to_string(m) + " q=" + std::to_string(q) +
               " seed=" + std::to_string(seed);
      });
      Index w0 = wq_dimension(k, 0);
      ck.expect(w0 == pairs - m, "W_0 dimension is not binomial(n,2) - m");
    };
    if (i % 2 == 0)
      check_instance(fq);
    else
      check_instance(fp);
  }

  // Monotonicity: enlarging K can only shrink every graded piece.
  const int pairs_checked = level == VerifyLevel::full ? 20 : 5;
  for (int i = 0; i < pairs_checked; ++i) {
    Index n = static_cast<Index>(rng.in_range(4, 5));
    Index pairs = n * (n - 1) / 2;
    Index m = static_cast<Index>(rng.in_range(1, pairs - 2));
    std::uint64_t seed = rng.next();
    auto small = random_subspace(n, m, fq, seed);
    // Extend by a fresh random row until the span grows by one.
    SparseMatrix<RationalField> big_basis = small.basis();
    SplitMix64 row_rng(seed ^ 0x9e3779b97f4a7c15ull);
    for (int attempt = 0; attempt < 100; ++attempt) {
      TripletBuilder<RationalField> tb;
      for (Index c = 0; c < pairs; ++c) {
        Rat v = fq.from_int(row_rng.in_range(-10, 10));
        if (sgn(v) != 0) tb.add(0, c, v);
      }
      auto cand = vstack(big_basis, tb.build(fq, 1, pairs));
      if (rank(cand) == m + 1) {
        big_basis = cand;
        break;
      }
    }
    auto big = Subspace2<RationalField>(fq, n, big_basis);
    for (Index q = 0; q <= 2; ++q) {
      Index ds = wq_dimension(small, q);
      Index db = wq_dimension(big, q);
      ck.expect(db <= ds, [&] {
        return "monotonicity fails at n=" + std::to_string(n) +
               " m=" + std::to_string(m) + " q=" + std::to_string(q) +
               " seed=" + std::to_string(seed) + ": " + std::to_string(db) +
               " > " + std::to_string(ds);
      });
    }
  }
  return ck;
}

}  // namespace

std::vector<CriterionResult> run_verification(VerifyLevel level) {
  struct Entry {
    const char* id;
    const char* title;
    Check (*fn)(VerifyLevel);
  };
  const Entry table[] = {
      {"C01", "threshold vanishing for the transvectant and derivative families", c01},
      {"C02", "sharp bound attained by certified-trivial random subspaces", c02},
      {"C03", "codimension-one family has Hilbert prefix 1,2,...,n+1", c03},
      {"C04", "resonant perturbations meet the multiplicity lower bound", c04},
      {"C05", "triviality verdict matches projective point enumeration", c05},
      {"C06", "split O(1)+O(1) family counts (p+1)^2 resonance points", c06},
      {"C07", "divisor degree equals (n-2) times the Catalan degree", c07},
      {"C08", "expanded class derivation equals the closed form", c08},
      {"C09", "canonical-pencil class matches the divisor class", c09},
      {"C10", "curve class collapses to a pure hhat multiple", c10},
      {"C11", "h^1 of symmetric powers equals the sharp bound", c11},
      {"C12", "Mukai pairing and Sym^b vector identities", c12},
      {"C13", "complex property, dual routes, monotonicity, degree zero", c13},
  };

  std::vector<CriterionResult> out;
  for (const Entry& e : table) {
    auto t0 = std::chrono::steady_clock::now();
    Check ck = e.fn(level);
    auto t1 = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = e.id;
    r.title = e.title;
    r.passed = ck.ok;
    r.detail = ck.detail();
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace koszul
