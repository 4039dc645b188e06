#include <doctest.h>

#include "knotmm/oracle.hpp"
#include "knotmm/planar.hpp"

using namespace knotmm;

namespace {
Z fact(long n) {
  Z r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}
Z double_fact_odd(long m) {  // (2m-1)!!
  Z r = 1;
  for (long i = 1; i < 2 * m; i += 2) r *= i;
  return r;
}
QSeries genus_slice(const GenusSeries& f, int e) {
  return f.map([e](const LaurentPoly& p) { return p.coeff(e); });
}
}  // namespace

TEST_CASE("vacuum histograms") {
  auto h1 = vacuum_face_histogram(VacuumModel::Hermitean, 1);
  CHECK(h1.size() == 2);
  CHECK(h1[3] == 2);
  CHECK(h1[1] == 1);
  for (int n = 1; n <= 3; ++n) {
    uint64_t tot = 0;
    for (auto& [f, c] : vacuum_face_histogram(VacuumModel::Hermitean, n)) tot += c;
    CHECK(Z(static_cast<unsigned long>(tot)) == double_fact_odd(2 * n));
  }
  for (int n = 1; n <= 5; ++n) {
    auto h = vacuum_face_histogram(VacuumModel::Complex, n);
    uint64_t tot = 0;
    Poly p;
    for (auto& [f, c] : h) {
      tot += c;
      p += Poly::monomial(f, Q(Z(static_cast<unsigned long>(c))));
    }
    CHECK(Z(static_cast<unsigned long>(tot)) == fact(2 * n));
    CHECK(p == complex_vacuum_polynomial_characters(n));
  }
}

TEST_CASE("thread count does not change results") {
  CHECK(vacuum_face_histogram(VacuumModel::Complex, 4, 1) == vacuum_face_histogram(VacuumModel::Complex, 4, 3));
  CHECK(vacuum_face_histogram(VacuumModel::Hermitean, 3, 1) == vacuum_face_histogram(VacuumModel::Hermitean, 3, 2));
}

TEST_CASE("planar stratum of the Hermitean free energy") {
  auto f = vacuum_free_energy(VacuumModel::Hermitean, 4);
  auto planar = genus_slice(f, 0);
  auto closed = free_energy_closed(QSeries::constant(1, 4));
  CHECK(planar[1] == Q(1, 2));
  CHECK(planar == closed);
  // only N^(2-2h) appears
  for (int n = 0; n <= 4; ++n)
    for (auto& [e, c] : f[n].terms()) CHECK(e % 2 == 0);
  CHECK(f[0].is_zero());
}

TEST_CASE("complex model free energy") {
  auto f = vacuum_free_energy(VacuumModel::Complex, 4);
  auto planar = genus_slice(f, 0);
  // oriented model: planar F is twice the Hermitean one at the same coupling
  auto closed = free_energy_closed(QSeries::constant(1, 4));
  CHECK(planar == closed * Q(2));
  for (int n = 0; n <= 4; ++n)
    for (auto& [e, c] : f[n].terms()) {
      CHECK(e % 2 == 0);
      CHECK(e <= 0);
    }
  CHECK(f[2].coeff(-2) != 0);
}

TEST_CASE("genus of a matching") {
  // one vertex, half-edges 0..3 in cyclic order
  CHECK(genus_of({1, 0, 3, 2}) == 0);
  CHECK(genus_of({3, 2, 1, 0}) == 0);
  CHECK(genus_of({2, 3, 0, 1}) == 1);
  // two vertices, disconnected
  CHECK_THROWS(genus_of({1, 0, 3, 2, 5, 4, 7, 6}));
  // stratified counts add up
  auto h = vacuum_face_histogram(VacuumModel::Hermitean, 2);
  uint64_t tot = 0;
  for (auto& [fc, c] : h) tot += c;
  CHECK(tot == 105);
}

TEST_CASE("coloured diagrams") {
  auto d = enumerate_coloured(1, 4, false);
  auto e = oracle_E(d, pattern_from_string("(12)"));
  CHECK(e.coeffs[0][0] == Poly::x());
  auto c = crossings_only(e);
  // tau = 1 counts rooted planar quartic maps
  std::vector<long> maps = {1, 2, 9, 54, 378};
  for (int n = 0; n <= 4; ++n) CHECK(c[n].eval(1) == maps[n]);
  std::vector<long> knots = {1, 2, 8, 42, 260};
  for (int n = 0; n <= 4; ++n) CHECK(c[n].coeff(1) == knots[n]);

  auto t = enumerate_coloured(2, 3, true);
  CHECK(t.tangency);
  auto j = coloured_json(t, pattern_from_string("(13)(24)"));
  CHECK(j["model"] == "coloured-tangency");
  CHECK(genus_series_json(VacuumModel::Complex, vacuum_free_energy(VacuumModel::Complex, 2))["model"] == "complex");
}
