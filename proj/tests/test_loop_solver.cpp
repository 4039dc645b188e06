#include <doctest.h>

#include "knotmm/loop_solver.hpp"
#include "knotmm/oracle.hpp"

using namespace knotmm;

namespace {
Pattern P(const char* s) { return pattern_from_string(s); }

// rooted planar 4-valent maps with n vertices: 2 3^n (2n)! / (n! (n+2)!)
Q quartic_maps(long n) {
  Z a, b, c, p3;
  mpz_fac_ui(a.get_mpz_t(), 2 * n);
  mpz_fac_ui(b.get_mpz_t(), n);
  mpz_fac_ui(c.get_mpz_t(), n + 2);
  mpz_ui_pow_ui(p3.get_mpz_t(), 3, n);
  Q r(2 * p3 * a, b * c);
  r.canonicalize();
  return r;
}
}  // namespace

TEST_CASE("boundary moves") {
  auto p = P("(12)");
  CHECK(arch_insert(p).size() == 4);
  CHECK(is_pattern(arch_insert(P("(14)(23)"))));
  CHECK(is_pattern(tangency_a(P("(13)(24)"))));
  CHECK(is_pattern(tangency_b(P("(13)(24)"))));
}

TEST_CASE("two-point function at fixed tau") {
  auto e = solve_E(P("(12)"), 6, 1);
  for (int n = 0; n <= 6; ++n) CHECK(e[n] == quartic_maps(n));
  for (int tau : {2, 3, 5}) CHECK(solve_E(P("(12)"), 0, tau)[0] == tau);
}

TEST_CASE("solver agrees with the diagram oracle") {
  for (int k = 1; k <= 2; ++k) {
    auto d = enumerate_coloured(k, 4, true);
    for (auto& p : enumerate_patterns(k)) {
      auto E = oracle_E(d, p);
      for (int tau : {1, 2, 3}) {
        auto s = solve_E_two_coupling(p, 4, tau, 1);
        for (int m = 0; m <= 4; ++m)
          for (int b = 0; b <= m; ++b) CHECK(E.coeffs[m][b].eval(tau) == s.coeffs[m][b]);
        auto one = solve_E(p, 4, tau);
        CHECK(one == s.g1_series());
      }
    }
  }
}

TEST_CASE("knot counting mode") {
  LoopSolver z({WMode::Zero});
  auto s = z.solve(P("(12)"), 13);
  std::vector<long> ref = {1, 2, 8, 42, 260, 1796, 13396, 105706, 870772, 7420836, 65004584, 582521748};
  for (size_t n = 0; n < ref.size(); ++n) CHECK(s[n] == ref[n]);
  CHECK(s[12] == Q(Z("5320936416")));
  CHECK(s[13] == Q(Z("49402687392")));
  // the tau^1 slice of the crossing-only diagrams
  auto d = enumerate_coloured(1, 5, false);
  auto ts = crossings_only(oracle_E(d, P("(12)")));
  for (int n = 0; n <= 5; ++n) CHECK(ts[n].coeff(1) == s[n]);
  CHECK(solve_E_tau_zero(P("(12)"), 13) == s);
}

TEST_CASE("generic tau") {
  std::vector<Pattern> ps = {P("(12)"), P("(12)(34)"), P("(13)(24)")};
  auto g = solve_E_generic(ps, 5);
  for (size_t i = 0; i < ps.size(); ++i) {
    for (int tau : {1, 2, 3, 7}) {
      auto fixed = solve_E(ps[i], 5, tau);
      for (int n = 0; n <= 5; ++n) CHECK(g[i][n].eval(tau) == fixed[n]);
    }
    int k = static_cast<int>(ps[i].size()) / 2;
    for (int n = 0; n <= 5; ++n) {
      CHECK(g[i][n].degree() <= k + n);
      CHECK(g[i][n].coeff(0) == 0);
      for (auto& c : g[i][n].coeffs()) {
        CHECK(c.get_den() == 1);
        CHECK(c >= 0);
      }
    }
  }
  auto z = solve_E_tau_zero(P("(12)"), 5);
  for (int n = 0; n <= 5; ++n) CHECK(g[0][n].coeff(1) == z[n]);

  auto bi = solve_E_two_coupling_generic(ps, 4, 1);
  for (int tau : {2, 3}) {
    auto fixed = solve_E_two_coupling(ps[2], 4, tau, 1);
    for (int m = 0; m <= 4; ++m)
      for (int b = 0; b <= m; ++b) CHECK(bi[2].coeffs[m][b].eval(tau) == fixed.coeffs[m][b]);
  }
  CHECK(generic_sample_points(3).size() == 3);
}

TEST_CASE("weighted truncation") {
  auto a = solve_E_two_coupling(P("(12)"), 6, 2, 1);
  auto b = solve_E_two_coupling(P("(12)"), 6, 2, 3);
  for (int m = 0; m <= 6; ++m)
    for (int j = 0; 3 * j <= m; ++j) CHECK(b.at(m - 3 * j, j) == a.at(m - 3 * j, j));
}

TEST_CASE("connectivity correlators") {
  auto e1 = solve_E(P("(12)"), 4, 3);
  auto I1 = E_to_I({{P("(12)"), e1}}, 1, 3);
  CHECK(I1.at(P("(12)")) == e1 * inverse(Q(3)));

  std::map<Pattern, QSeries> E2;
  for (auto& p : enumerate_patterns(2)) E2[p] = solve_E(p, 4, 3);
  auto I2 = E_to_I(E2, 2, 3);
  for (auto& p : enumerate_patterns(2)) {
    QSeries back(4);
    for (auto& s : enumerate_patterns(2)) back += I2.at(s) * gram_entry(p, s).eval(3);
    CHECK(back == E2.at(p));
  }
  // one crossing joining opposite legs
  CHECK(I2.at(P("(13)(24)"))[1] == 1);
  CHECK(I2.at(P("(13)(24)"))[0] == 0);
  CHECK(I2.at(P("(12)(34)"))[0] == 1);

  auto d = enumerate_coloured(2, 3, false);
  std::map<Pattern, TauSeries> Eg;
  auto gen = solve_E_generic(enumerate_patterns(2), 3);
  for (size_t i = 0; i < gen.size(); ++i) Eg[enumerate_patterns(2)[i]] = gen[i];
  auto Ig = E_to_I_generic(Eg, 2);
  for (auto& s : enumerate_patterns(2)) CHECK(crossings_only(oracle_I(d, s)) == Ig.at(s));

  std::map<Pattern, QSeries> E1;
  for (auto& p : enumerate_patterns(2)) E1[p] = solve_E(p, 2, 1);
  CHECK_THROWS_AS(E_to_I(E1, 2, 1), std::domain_error);
}

TEST_CASE("correlator json") {
  auto s = solve_E_two_coupling(P("(12)"), 2, 2, 1);
  auto j = bi_series_to_json(s);
  CHECK(j["truncation_order"] == 2);
  CHECK(j["g2_weight"] == 1);
  CHECK(!j["terms"].empty());
  auto t = correlator_table_json("planar", "2", 2, {{P("(12)(34)"), series_to_json(solve_E(P("(12)(34)"), 2, 2))}});
  CHECK(t["entries"][0]["pattern"] == std::vector<int>{2, 1, 4, 3});
  CHECK(t["tau"] == "2");
}
