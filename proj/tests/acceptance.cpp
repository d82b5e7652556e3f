// Acceptance suite: one line per criterion, faithful to the stated
// tolerances. Exit status is the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "crlc/automorphisms.hpp"
#include "crlc/normal_form.hpp"
#include "crlc/replication.hpp"

using namespace crlc;

namespace {

RationalMap cat(const char* n, std::map<std::string, Scalar> p = {}) {
  return std::get<RationalMap>(catalog_map(n, p));
}

std::vector<Scalar> sphere_point(long s, long t1, long t2) {
  Scalar ss = Scalar::ratio(s, 7);
  Scalar r = (Scalar(1) - ss * ss) / (Scalar(1) + ss * ss);
  Scalar q = Scalar(2) * ss / (Scalar(1) + ss * ss);
  return {r * unit_from_circle(Scalar::ratio(t1, 5)), q * unit_from_circle(Scalar::ratio(t2, 3))};
}

struct Criterion {
  int number;
  const char* label;
  double budget_seconds;  // 0 = no stated budget
  std::function<bool(std::string&)> check;
};

bool expect(bool cond, std::string& detail, const std::string& what) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({1, "exact verification of the rational catalog and sampled automorphisms",
                      60.0, [](std::string& detail) {
    bool ok = true;
    ok &= expect(mapping_residual(cat("ell")).passed(), detail, "ell");
    for (auto beta : {Scalar(1), Scalar(-1), Scalar::ratio(1, 4), Scalar::ratio(-1, 4),
                      Scalar(2), Scalar(-3)}) {
      ok &= expect(mapping_residual(cat("r_beta", {{"beta", beta}})).passed(), detail,
                   "r_beta " + beta.str());
    }
    ok &= expect(mapping_residual(cat("H0")).passed(), detail, "H0");
    // ten sampled stability and transitive automorphisms of X and H3
    std::vector<RationalMap> autos;
    autos.push_back(stab_X({Scalar(mpq_class(1), mpq_class(1)), Scalar::ratio(1, 2),
                            unit_from_circle(Scalar::ratio(1, 3)), Scalar(2)}));
    autos.push_back(stab_X({Scalar(mpq_class(-2), mpq_class(1, 2)), Scalar::ratio(-3, 4),
                            unit_from_circle(Scalar::ratio(-2, 5)), Scalar::ratio(1, 3)}));
    autos.push_back(stab_X({Scalar(mpq_class(0), mpq_class(1)), Scalar(1),
                            unit_from_circle(Scalar(2)), Scalar(5)}));
    autos.push_back(trans_tau(Scalar(mpq_class(1), mpq_class(2)), Scalar::ratio(-2, 7)));
    autos.push_back(trans_tau(Scalar(mpq_class(-1, 3), mpq_class(2, 5)), Scalar(3)));
    autos.push_back(trans_dilation_lambda(Scalar(2)));
    autos.push_back(trans_dilation_mu(Scalar::ratio(9, 4)));
    autos.push_back(stab_H3(Scalar(1), Scalar(0), Scalar(1), Scalar(1)));
    autos.push_back(stab_H3(Scalar(mpq_class(1, 2), mpq_class(-1, 3)), Scalar::ratio(2, 5),
                            unit_from_circle(Scalar::ratio(1, 2)), Scalar::ratio(3, 4)));
    autos.push_back(heis_translation(Scalar(mpq_class(1), mpq_class(-1)),
                                     Scalar(mpq_class(3), mpq_class(2))));
    int idx = 0;
    for (const auto& a : autos) {
      ok &= expect(mapping_residual(a).passed(), detail,
                   "sampled automorphism #" + std::to_string(idx));
      ++idx;
    }
    return ok;
  }});

  criteria.push_back({2, "iota passes series verification at weighted order 20", 120.0,
                      [](std::string& detail) {
    auto rep = mapping_residual(iota_germ(20), 20);
    return expect(rep.passed() && rep.residual.is_zero(), detail, "residual not exactly 0");
  }});

  criteria.push_back({3, "H_t fails with the exact displayed residual, passes the functional system",
                      0.0, [](std::string& detail) {
    auto rep = mapping_residual(cat("Ht", {{"t", Scalar(1)}}));
    const auto& a = alpha_h3();
    Poly z = Poly::var(a, "z", Scalar(1)), zb = Poly::var(a, "zb", Scalar(1));
    Poly wb = Poly::var(a, "wb", Scalar(1));
    Poly expect_res = (z * zb * wb.pow(3)).scaled_long(-4) *
                      (wb + (z * zb).scaled(Scalar::imag_ratio(2, 1))).pow(3);
    bool ok = expect(!rep.passed(), detail, "Ht passed unexpectedly");
    ok &= expect(rep.residual == expect_res, detail, "residual differs from the displayed one");
    auto res = functional_residuals(taylor_germ(cat("Ht", {{"t", Scalar(1)}}), 18),
                                    {Scalar(0), Scalar(0), Scalar(12)});
    ok &= expect(res[0].is_zero() && res[1].is_zero() && res[2].is_zero(), detail,
                 "functional residuals nonzero");
    return ok;
  }});

  criteria.push_back({4, "quotients of P1, R0, P-1", 0.0, [](std::string& detail) {
    const auto& a = alpha_s3();
    Poly one(a, Scalar(1));
    Poly zzb = Poly::var(a, "z", Scalar(1)) * Poly::var(a, "zb", Scalar(1));
    Poly wwb = Poly::var(a, "w", Scalar(1)) * Poly::var(a, "wb", Scalar(1));
    auto eq = [&](const RationalMap& m, const Poly& expect_q) {
      auto [qn, qd] = quotient_Q(m);
      return (qn - expect_q * qd).is_zero();
    };
    bool ok = expect(eq(cat("P1"), one + zzb + wwb), detail, "Q(P1)");
    ok &= expect(eq(cat("R0"), one), detail, "Q(R0)");
    ok &= expect(eq(cat("Pm1"), one - zzb + wwb), detail, "Q(P-1)");
    return ok;
  }});

  criteria.push_back({5, "Ahlfors values and the normal-form relation A|0 = alpha/2", 0.0,
                      [](std::string& detail) {
    bool ok = true;
    long samples[][3] = {{1, 1, 1}, {2, -1, 1}, {3, 2, -1}, {-2, 1, 2}, {4, -2, 1}};
    for (auto& s : samples) {
      auto p = sphere_point(s[0], s[1], s[2]);
      ok &= expect(ahlfors(cat("P1"), p, field_Z1_S3()) == Scalar::ratio(1, 2), detail,
                   "A(P1) != 1/2");
    }
    ok &= expect(ahlfors(cat("R0"), sphere_point(1, 2, 1), field_Z1_S3()).is_zero(), detail,
                 "A(R0) != 0");
    ok &= expect(ahlfors(cat("Pm1"), {Scalar::ratio(3, 5), Scalar::ratio(4, 5)},
                         field_Z1_S3()) == Scalar::ratio(-25, 32),
                 detail, "A(P-1)(3/5,4/5) != -25/32");
    // A(I) = 0 in series mode: the pulled-back defining function equals the
    // sphere one identically, so the quotient is 1 and the tensor vanishes
    ok &= expect(mapping_residual(std::get<SphereGerm>(catalog_map("I", {}, 12)), 12).passed(),
                 detail, "I quotient identity fails at order 12");
    // normal-form relation, as stated: A|0 == alpha/2 on all four
    // transversal catalog germs
    struct Case {
      const char* name;
      MapGerm germ;
    };
    std::vector<Case> germs;
    germs.push_back({"ell", taylor_germ(cat("ell"), 12)});
    germs.push_back({"r_1", taylor_germ(cat("r_beta", {{"beta", Scalar(1)}}), 12)});
    germs.push_back({"r_-1", taylor_germ(cat("r_beta", {{"beta", Scalar(-1)}}), 12)});
    germs.push_back({"iota", iota_germ(12)});
    for (auto& c : germs) {
      Scalar measured = ahlfors_germ(c.germ);
      Scalar alpha =
          partial_normal_form(c.germ).data.alpha.constant_term(Scalar(0));
      bool rel = measured == alpha * Scalar::ratio(1, 2);
      if (!rel) {
        detail += std::string(detail.empty() ? "" : "; ") + "A|0 = alpha/2 fails on " + c.name +
                  ": measured A|0 = " + measured.str() + ", alpha = " + alpha.str() +
                  " (exact computation gives A|0 = alpha; see decisions ledger)";
        ok = false;
      }
    }
    return ok;
  }});

  criteria.push_back({6, "composition identities", 0.0, [](std::string& detail) {
    auto chain1 = compose(cat("Phi"), compose(cat("H0"), compose(cat("Cayley"), cat("gamma1"))));
    bool ok = expect(rational_maps_equal(chain1, cat("R0").negated()), detail,
                     "Phi o H0 o C o gamma1 != -R0");
    auto rhat = compose(cat("Psi1"), compose(cat("XY_R"), cat("Psi2")));
    auto rcheck =
        compose(cat("ex52_phi2p"), compose(cat("ex52_phi1p"), compose(rhat, cat("ex52_phi"))));
    auto L = compose(cat("ex52_phip"), compose(rcheck, cat("ex52_phihat")));
    ok &= expect(rational_maps_equal(L, cat("ell")), detail, "linmap chain != ell");
    return ok;
  }});

  criteria.push_back({7, "five-way classification", 0.0, [](std::string& detail) {
    bool ok = true;
    ok &= expect(classify(iota_germ(20)).kind == ClassKind::Iota, detail, "iota");
    ok &= expect(classify(taylor_germ(cat("r_beta", {{"beta", Scalar(1)}}), 20)).kind ==
                     ClassKind::R_plus,
                 detail, "r_1");
    ok &= expect(classify(taylor_germ(cat("r_beta", {{"beta", Scalar(-1)}}), 20)).kind ==
                     ClassKind::R_minus,
                 detail, "r_-1");
    ok &= expect(classify(taylor_germ(cat("ell"), 20)).kind == ClassKind::Linear_ell, detail,
                 "ell");
    ok &= expect(classify(recenter(cat("ell"), {Scalar(1), Scalar(mpq_class(1), mpq_class(1))}))
                         .kind == ClassKind::Linear_ell,
                 detail, "recentered ell");
    for (auto& w0 : {Scalar(1), Scalar(-2), Scalar::ratio(1, 3)}) {
      ok &= expect(classify(recenter(cat("H0"), {Scalar(0), w0})).kind == ClassKind::Linear_ell,
                   detail, "recentered H0");
    }
    const auto& a = alpha_h3();
    Poly z = Poly::var(a, "z", Scalar(1)), w = Poly::var(a, "w", Scalar(1));
    for (const Poly& phi : {z, w, z + w * w}) {
      auto label = classify(nontransversal_germ(phi, 16));
      ok &= expect(label.kind == ClassKind::Nontransversal && label.phi &&
                       *label.phi == Series(phi, 16),
                   detail, "t_phi");
    }
    return ok;
  }});

  criteria.push_back({8, "replication pipeline", 0.0, [](std::string& detail) {
    bool ok = true;
    // first Segre closed forms
    FirstSegre fs1 =
        first_segre_profile({Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)}, 20);
    Poly z = Poly::var(alpha_h3(), "z", Scalar(1));
    ok &= expect(fs1.f == series_substitute_var(iota_germ(20).f, "w", Poly(alpha_h3())),
                 detail, "lambda=1 profile");
    NfParams nf0{Scalar(0), Scalar(2), Scalar(0), Scalar(0), Scalar(0)};
    FirstSegre fs0 = first_segre_profile(nf0, 20);
    ok &= expect(fs0.f == Series(z, 20) &&
                     fs0.phi == Series((z * z).scaled_long(2), 20),
                 detail, "lambda=0 profile");
    // solvability determinant
    Jet3 relations{Scalar(2), Scalar(0), Scalar(6), Scalar::imag_ratio(2, 1), Scalar(0),
                   Scalar(6)};
    ok &= expect(weight3_solvability({Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0)},
                                     relations, 24)
                     .is_zero(),
                 detail, "Delta != 0 under the derived relations");
    Series det2 = weight3_solvability({Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(1)},
                                      Jet3{}, 24);
    Mono m7;
    m7.e[alpha_h3()->index_of("z")] = 7;
    m7.wdeg = 7;
    ok &= expect(det2.body().low_weight() == 7 &&
                     det2.body().coeff(m7, Scalar(0)) == Scalar::imag_ratio(192, 1),
                 detail, "sigma-leading term");
    // functional solver reproduces r_1 through weight 16
    MapGerm solved =
        solve_functional_system({Scalar(2), Scalar(2), Scalar::imag_ratio(6, 1)}, 17);
    MapGerm expect_r1 = taylor_germ(cat("r_beta", {{"beta", Scalar(1)}}), 17);
    ok &= expect(solved.f == expect_r1.f && solved.phi == expect_r1.phi &&
                     solved.g == expect_r1.g,
                 detail, "solver vs r_1");
    // constraints
    for (long av : {1L, 2L, 3L}) {
      auto sol = solve_constraints(Scalar(av));
      ok &= expect(sol.eta == Scalar(av * av) * Scalar::ratio(1, 2) && sol.xi.is_zero() &&
                       sol.gamma.is_zero(),
                   detail, "solve_constraints alpha=" + std::to_string(av));
      auto r = constraint_residuals({Scalar(av), sol.eta, sol.xi, sol.gamma});
      ok &= expect(r[0].is_zero() && r[1].is_zero() && r[2].is_zero(), detail,
                   "constraint residuals");
    }
    auto sol0 = solve_constraints(Scalar(0));
    ok &= expect(sol0.eta.is_zero() && sol0.xi.is_zero() && sol0.gamma.is_zero(), detail,
                 "alpha = 0 solution");
    // second Segre construction
    MapGerm it = iota_second_segre(20);
    MapGerm itd = iota_germ(20);
    ok &= expect(it.f == itd.f && it.phi == itd.phi && it.g == itd.g, detail,
                 "iota second Segre");
    return ok;
  }});

  criteria.push_back({9, "Delta factorization of induced type-IV automorphisms", 0.0,
                      [](std::string& detail) {
    StabParamsX tuples[5] = {
        {Scalar(1), Scalar(1), Scalar(1), Scalar(1)},
        {Scalar(mpq_class(1), mpq_class(1)), Scalar::ratio(1, 2),
         unit_from_circle(Scalar::ratio(1, 3)), Scalar(2)},
        {Scalar(mpq_class(-2), mpq_class(1, 2)), Scalar::ratio(-3, 4),
         unit_from_circle(Scalar::ratio(-2, 5)), Scalar::ratio(1, 3)},
        {Scalar(mpq_class(2, 3), mpq_class(-1, 5)), Scalar::ratio(7, 9),
         unit_from_circle(Scalar::ratio(5, 11)), Scalar::ratio(9, 7)},
        {Scalar(mpq_class(0), mpq_class(2)), Scalar(-2), unit_from_circle(Scalar(1)),
         Scalar::ratio(1, 5)},
    };
    bool ok = true;
    for (int k = 0; k < 5; ++k) {
      try {
        AutD4 a4 = aut_D4(tuples[k]);  // throws if the factorization fails
        for (const auto& v : a4.map.value_at(a4.W))
          ok &= expect(v.is_zero(), detail, "H~(W) != 0 at tuple " + std::to_string(k));
      } catch (const std::exception& e) {
        ok = expect(false, detail, std::string("factorization failed: ") + e.what());
      }
    }
    return ok;
  }});

  criteria.push_back({10, "xy identity for P1 and its companion sphere map", 0.0,
                      [](std::string& detail) {
    const auto& a = alpha_s3();
    Poly one(a, Scalar(1));
    Poly z = Poly::var(a, "z", Scalar(1)), w = Poly::var(a, "w", Scalar(1));
    std::vector<MapComponent> F = {
        {z * z, one}, {Poly::sqrt2(a, Scalar(1)) * z * w, one}, {w * w, one}};
    return expect(xy_identity(cat("P1"), F), detail, "xy identity fails");
  }});

  criteria.push_back({11, "property suites", 0.0, [](std::string& detail) {
    bool ok = true;
    // 200 random ring-axiom and conjugation cases
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> coef(-5, 5), den(1, 3), e(0, 2);
    auto random_poly = [&] {
      Poly out(alpha_h3());
      for (int t = 0; t < 4; ++t) {
        Poly mono(alpha_h3(), Scalar(mpq_class(coef(rng), den(rng)), mpq_class(coef(rng))));
        for (const auto& v : alpha_h3()->vars) {
          int ex = e(rng);
          if (ex) mono = mono * Poly::var(alpha_h3(), v, Scalar(1)).pow(ex);
        }
        out += mono;
      }
      return out;
    };
    for (int k = 0; k < 200; ++k) {
      Poly A = random_poly(), B = random_poly(), C = random_poly();
      ok &= (A * B) * C == A * (B * C);
      ok &= A * (B + C) == A * B + A * C;
      ok &= (A * B).conj() == A.conj() * B.conj();
    }
    ok &= expect(ok, detail, "ring axioms");
    // series sqrt squaring
    for (int k = 0; k < 40 && ok; ++k) {
      Poly tail = random_poly();
      tail -= Poly(alpha_h3(), tail.constant_term(Scalar(0)));
      Scalar r2c = tail.sqrt2_term(Scalar(0));
      if (!r2c.is_zero()) tail += Poly::sqrt2(alpha_h3(), -r2c);
      Series s(Poly(alpha_h3(), Scalar(1)) + tail, 8);
      Series r = series_sqrt(s);
      ok &= (r * r - s).is_zero();
    }
    ok &= expect(ok, detail, "series sqrt");
    // Ahlfors invariance under ten sampled stability automorphisms
    MapGerm base = taylor_germ(cat("r_beta", {{"beta", Scalar(1)}}), 12);
    Scalar a0 = ahlfors_germ(base);
    for (int k = 0; k < 10; ++k) {
      StabParamsX p{Scalar(mpq_class(k - 4, 3), mpq_class(1, k + 2)),
                    Scalar::ratio(2 * k - 9, 7), unit_from_circle(Scalar::ratio(k, 11)),
                    Scalar::ratio(k + 1, 3)};
      ok &= ahlfors_germ(postcompose_germ(stab_X(p), base)) == a0;
    }
    ok &= expect(ok, detail, "Ahlfors invariance");
    // classifier invariance under sandwiches
    StabParamsX p{Scalar(mpq_class(1), mpq_class(-1)), Scalar::ratio(2, 3),
                  unit_from_circle(Scalar::ratio(-1, 2)), Scalar::ratio(3, 2)};
    auto gamma = stab_H3(Scalar(mpq_class(0), mpq_class(1)), Scalar::ratio(1, 2),
                         unit_from_circle(Scalar(2)), Scalar::ratio(1, 2));
    for (int which = 0; which < 3 && ok; ++which) {
      MapGerm g = which == 0   ? taylor_germ(cat("r_beta", {{"beta", Scalar(1)}}), 14)
                  : which == 1 ? taylor_germ(cat("ell"), 14)
                               : iota_germ(14);
      auto expect_kind = classify(g, 14).kind;
      MapGerm moved = precompose_germ(postcompose_germ(stab_X(p), g), gamma);
      ok &= classify(moved, 14).kind == expect_kind;
    }
    ok &= expect(ok, detail, "classifier invariance");
    return ok;
  }});

  int failures = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (pass && c.budget_seconds > 0 && secs > c.budget_seconds) {
      pass = false;
      detail = "over time budget";
    }
    std::printf("criterion %2d [%5.1fs] %-4s %s%s%s\n", c.number, secs,
                pass ? "PASS" : "FAIL", c.label, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
