#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "spinvol/obstruction.hpp"

using namespace spinvol;

namespace {

std::vector<std::pair<long, long>> as_pairs(const std::vector<SpinPartition> &v) {
  std::vector<std::pair<long, long>> out;
  for (const auto &p : v) out.emplace_back(p.n_plus, p.n_minus);
  return out;
}

template <class F> ErrorCode error_of(F &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Internal;
}

} // namespace

TEST_CASE("relative sign composition") {
  using enum RelativeSign;
  for (RelativeSign x : {Same, Opposite}) {
    CHECK((Same * x) == x);
    CHECK((x * Same) == x);
    for (RelativeSign y : {Same, Opposite})
      for (RelativeSign z : {Same, Opposite})
        CHECK(((x * y) * z) == (x * (y * z)));
  }
  CHECK((Opposite * Opposite) == Same);
  // epsilon'(P,Q) = epsilon(P) epsilon(Q)
  for (int ep : {-1, 1})
    for (int eq : {-1, 1}) {
      const RelativeSign rel = ep == eq ? Same : Opposite;
      CHECK(as_factor(rel) == ep * eq);
    }
}

TEST_CASE("framing rules") {
  CHECK(epsilon_relation(2) == RelativeSign::Same);
  CHECK(epsilon_relation(0) == RelativeSign::Opposite);
  CHECK(epsilon_relation(-2) == RelativeSign::Same);
  CHECK(epsilon_relation(-4) == RelativeSign::Opposite);
  CHECK(error_of([] { epsilon_relation(3); }) == ErrorCode::OddFraming);

  CHECK(spin_type_relation(2) == RelativeSign::Same);
  CHECK(spin_type_relation(4) == RelativeSign::Opposite);
  CHECK(spin_type_relation(6) == RelativeSign::Same);
  CHECK(error_of([] { spin_type_relation(-1); }) == ErrorCode::OddFraming);

  CHECK(epsilon_spin_bridge(RelativeSign::Same) == RelativeSign::Same);
  CHECK(epsilon_spin_bridge(RelativeSign::Opposite) == RelativeSign::Opposite);
  for (long f = -12; f <= 12; f += 2)
    CHECK(epsilon_spin_bridge(epsilon_relation(f)) == spin_type_relation(f));
}

TEST_CASE("admissible epsilon sums") {
  CHECK(admissible_epsilon_sums(-16, 4).empty());
  CHECK(admissible_epsilon_sums(-16, 8) == std::vector<long>{-8, 8});
  CHECK(admissible_epsilon_sums(0, 2) == std::vector<long>{0});
  CHECK(error_of([] { admissible_epsilon_sums(-12, 4); }) ==
        ErrorCode::SigmaNotSpin);
}

TEST_CASE("admissible epsilon sums agree with brute force") {
  for (long sigma = -64; sigma <= 64; sigma += 8)
    for (long k = 0; k <= 12; ++k) {
      CAPTURE(sigma);
      CAPTURE(k);
      const auto got = admissible_epsilon_sums(sigma, k);
      CHECK(got == oracle::brute_epsilon_sums(sigma, k, 2 * k + 8));
      for (long s : got) CHECK(s % 8 == 0);
    }
}

TEST_CASE("Rohlin-admissible pairs") {
  CHECK(rohlin_admissible_pairs(-16, 4).empty());
  CHECK(as_pairs(rohlin_admissible_pairs(-16, 8)) ==
        std::vector<std::pair<long, long>>{{0, 8}, {8, 0}});
  CHECK(as_pairs(rohlin_admissible_pairs(0, 2)) ==
        std::vector<std::pair<long, long>>{{1, 1}});
  CHECK(as_pairs(rohlin_admissible_pairs(-32, 6)) ==
        std::vector<std::pair<long, long>>{{3, 3}});
  CHECK(error_of([] { rohlin_admissible_pairs(-3, 4); }) ==
        ErrorCode::InvalidParameter);
}

TEST_CASE("Rohlin-admissible pairs agree with brute force") {
  for (long sigma = -64; sigma <= 64; sigma += 8)
    for (long k = 0; k <= 12; ++k)
      CHECK(as_pairs(rohlin_admissible_pairs(sigma, k)) ==
            oracle::brute_rohlin(sigma, k));
}

TEST_CASE("symmetric residue") {
  CHECK(symmetric_mod16(-8) == -8);
  CHECK(symmetric_mod16(8) == -8);
  CHECK(symmetric_mod16(-24) == -8);
  CHECK(symmetric_mod16(-16) == 0);
  CHECK(symmetric_mod16(7) == 7);
  CHECK(symmetric_mod16(-9) == 7);
}

TEST_CASE("smooth fixed-point data") {
  struct Case {
    PaperParams p;
    SpinPartition partition;
  };
  for (const auto &c : {Case{{2, 3, 1}, {2, 2}}, Case{{6, 7, 1}, {2, 2}},
                        Case{{2, 5, 3}, {4, 4}}}) {
    const auto fix = derive_smooth_fixdata(build_action(c.p));
    CHECK(fix.p_pprime == RelativeSign::Opposite);
    CHECK(fix.partition == c.partition);
    CHECK(fix.epsilon_sum == 0);
    CHECK(fix.epsilon_sum_candidates == std::vector<long>{-2, 0, 2});
  }
}

TEST_CASE("deductions compose transitively") {
  const auto action = build_action({2, 5, 3});
  const auto fix = derive_smooth_fixdata(action);
  const auto &eps = fix.epsilon_to_p;
  REQUIRE(eps.size() == action.roster.size());
  // relation(X, Y) = relation(X, P) relation(P, Y); then for any triple
  // relation(X, Y) relation(Y, Z) must equal relation(X, Z)
  for (std::size_t x = 0; x < eps.size(); ++x)
    for (std::size_t y = 0; y < eps.size(); ++y)
      for (std::size_t z = 0; z < eps.size(); ++z) {
        const auto xy = eps[x] * eps[y], yz = eps[y] * eps[z];
        CHECK((xy * yz) == (eps[x] * eps[z]));
      }
  for (std::size_t i = 0; i < eps.size(); ++i)
    CHECK(fix.spin_to_p[i] == epsilon_spin_bridge(eps[i]));
}

TEST_CASE("deduction fails without a balanced link") {
  auto action = build_action({2, 3, 1});
  // both handles framed 2 mod 4: epsilon sum is 1 + 2 +- 1, never 0 mod 8
  action.roster.points[1].framing = 2;
  CHECK(error_of([&] { derive_smooth_fixdata(action); }) ==
        ErrorCode::DeductionFailed);
  action.roster.points[1].framing = 3;
  CHECK(error_of([&] { derive_smooth_fixdata(action); }) ==
        ErrorCode::OddFraming);
}

TEST_CASE("certify") {
  SUBCASE("K3") {
    const auto v = certify({2, 3, 1});
    CHECK(v.kind == VerdictKind::Nonsmoothable);
    CHECK(v.certificate.rohlin_residue == -8);
    CHECK(v.certificate.sigma == -16);
    CHECK(v.certificate.fixed_count == 4);
    CHECK(v.certificate.partition == SpinPartition{2, 2});
    CHECK(v.admissible_partitions.empty());
  }
  SUBCASE("n = 4 is inconclusive") {
    const auto v = certify({4, 5, 1});
    CHECK(v.kind == VerdictKind::Inconclusive);
    CHECK(v.certificate.rohlin_residue == 0);
    CHECK(as_pairs(v.admissible_partitions) ==
          std::vector<std::pair<long, long>>{{2, 2}});
    const auto v6 = certify({4, 6, 2});
    CHECK(v6.kind == VerdictKind::Inconclusive);
    CHECK(std::find(v6.admissible_partitions.begin(),
                    v6.admissible_partitions.end(),
                    SpinPartition{3, 3}) != v6.admissible_partitions.end());
  }
  SUBCASE("n = 6") {
    CHECK(certify({6, 7, 3}).kind == VerdictKind::Nonsmoothable);
  }
  SUBCASE("invalid params propagate") {
    CHECK(error_of([] { certify({2, 2, 1}); }) ==
          ErrorCode::FurutaViolation);
  }
}

TEST_CASE("verdict depends only on n mod 4") {
  for (long n : {2, 4, 6})
    for (long m = n + 1; m <= n + 4; ++m)
      for (long r = (m % 2 == 0 ? 2 : 1); r < m; r += 2) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(r);
        const auto v = certify({n, m, r});
        CHECK(v.kind == (n % 4 == 2 ? VerdictKind::Nonsmoothable
                                    : VerdictKind::Inconclusive));
        const auto adm = rohlin_admissible_pairs(-8 * n, 2 * r + 2);
        const bool present =
            std::find(adm.begin(), adm.end(), SpinPartition{r + 1, r + 1}) !=
            adm.end();
        CHECK(present == (n % 4 == 0));
      }
}

TEST_CASE("certificate replay") {
  const auto cert = certify({2, 3, 1}).certificate;
  CHECK(verify_certificate(cert).ok);

  auto flipped = cert;
  flipped.verdict = VerdictKind::Inconclusive;
  const auto r1 = verify_certificate(flipped);
  CHECK_FALSE(r1.ok);
  CHECK(r1.divergence == "verdict");

  auto sigma = cert;
  sigma.sigma = -24;
  const auto r2 = verify_certificate(sigma);
  CHECK_FALSE(r2.ok);
  CHECK(r2.divergence == "sigma");

  auto params = cert;
  params.params.m = 2;
  CHECK_FALSE(verify_certificate(params).ok);

  auto version = cert;
  version.version = 2;
  CHECK(verify_certificate(version).divergence == "version");

  // (2, 5, 1) is valid and shares every derived field except the rank
  auto other_m = cert;
  other_m.params.m = 5;
  CHECK(verify_certificate(other_m).divergence == "rank");
  CHECK(compare_certificates(other_m, certify({2, 5, 1}).certificate)
            .divergence == "rank");
  other_m.rank = 26;
  CHECK(verify_certificate(other_m).divergence == "decomposition");

  auto bad_params = cert;
  bad_params.params.r = 2;
  CHECK(verify_certificate(bad_params).divergence.starts_with("params"));

  CHECK(compare_certificates(cert, cert).ok);
  CHECK(compare_certificates(cert, certify({6, 7, 1}).certificate).divergence ==
        "params");
}
