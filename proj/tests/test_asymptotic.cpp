#include <random>

#include "catch_amalgamated.hpp"

#include "omega/asymptotic.hpp"
#include "support/oracle.hpp"

using namespace omega;

namespace {
  std::vector<Integer> ints(std::initializer_list<long long> xs) {
    return std::vector<Integer>(xs.begin(), xs.end());
  }

  SemigroupSpec numerical(std::initializer_list<long long> xs) {
    return normalize_spec(SemigroupSpec::numerical(ints(xs)));
  }

  Rational q(long long n, long long d = 1) {
    return Rational(Integer(n), Integer(d));
  }

  Rational bar(SemigroupSpec const& s, NVec const& gamma) {
    return asymptotic_omega_element(s, Element::expression(gamma));
  }
}  // namespace

TEST_CASE("asymptotic omega of elements", "[asymptotic]") {
  CHECK(asymptotic_omega_element(numerical({5, 7, 11}), Element::value(5)) == 1);
  CHECK(asymptotic_omega_element(numerical({115, 212, 333, 571}), Element::value(10000))
        == q(2000, 23));
  CHECK(to_string(q(2000, 23)) == "2000/23");
  auto const t42 = SemigroupSpec::two_gen(4, 2);
  CHECK(bar(t42, NVec{0, 1}) == 2);
  CHECK(bar(t42, NVec{1, 0}) == 1);
  CHECK(bar(SemigroupSpec::two_gen(7, 5), NVec{6, 7}) == q(79, 5));
  CHECK(bar(SemigroupSpec::lattice(2, {ZVec(ints({7, -5}))}), NVec{6, 7}) == q(79, 5));
  CHECK(bar(SemigroupSpec::affine({NVec{2, 4}, NVec{3, 6}}), NVec{1, 1}) == q(5, 2));
}

TEST_CASE("asymptotic omega of monoids", "[asymptotic]") {
  CHECK(asymptotic_omega_semigroup(SemigroupSpec::two_gen(7, 5)) == q(7, 5));
  CHECK(asymptotic_omega_semigroup(SemigroupSpec::two_gen(4, 2)) == 2);
  CHECK(asymptotic_omega_semigroup(SemigroupSpec::two_gen(2, 4)) == 2);
  CHECK(asymptotic_omega_semigroup(numerical({115, 212, 333, 571})) == q(571, 115));
  CHECK(asymptotic_omega_semigroup(numerical({5, 7, 11})) == q(11, 5));
}

TEST_CASE("asymptotic errors", "[asymptotic]") {
  auto const plane = SemigroupSpec::affine({NVec{1, 0}, NVec{0, 1}});
  try {
    asymptotic_omega_semigroup(plane);
    FAIL("accepted a monoid that is not quasi-Archimedean");
  } catch (omega_error const& e) {
    CHECK(e.code() == errc::not_quasi_archimedean);
  }
  try {
    asymptotic_omega_element(numerical({3, 5}), Element::value(4));
    FAIL("accepted a non-member");
  } catch (omega_error const& e) {
    CHECK(e.code() == errc::not_member);
  }
}

TEST_CASE("empirical ratio sequences", "[asymptotic]") {
  auto const s = numerical({3, 5});
  auto const r = empirical_ratio_sequence(s, Element::value(3), 10);
  REQUIRE(r.size() == 10);
  CHECK(r[0] == 3);
  CHECK(r[1] == q(3, 2));
  for (std::size_t n = 3; n <= 10; ++n) {
    CHECK(r[n - 1] == 1);
  }
  CHECK(r[9] == asymptotic_omega_element(s, Element::value(3)));

  auto const t   = SemigroupSpec::two_gen(7, 5);
  auto const seq = empirical_ratio_sequence(t, Element::expression(NVec{6, 7}), 5);
  for (auto const& x : seq) {
    CHECK(x >= q(79, 5));
  }
  for (auto const& x : empirical_ratio_sequence(t, Element::expression(NVec{0, 0}), 4)) {
    CHECK(x == 0);
  }
  CHECK_THROWS_AS(empirical_ratio_sequence(t, Element::expression(NVec{1, 0}), 0), omega_error);
}

TEST_CASE("linearity and witness independence", "[asymptotic][property]") {
  std::mt19937_64                    rng(53);
  std::uniform_int_distribution<int> pick(0, 9), pick_m(0, 6);
  std::vector<SemigroupSpec>         specs{numerical({5, 7, 11}), SemigroupSpec::two_gen(9, 4),
                                   SemigroupSpec::affine({NVec{2, 4}, NVec{3, 6}, NVec{5, 10}})};
  for (auto const& s : specs) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Integer> g;
      for (std::size_t i = 0; i < s.arity(); ++i) {
        g.push_back(pick(rng));
      }
      Integer const m = pick_m(rng);
      CHECK(bar(s, m * NVec(g)) == Rational(m) * bar(s, NVec(g)));
    }
  }
  auto const n = numerical({5, 7, 11});
  for (int v = 0; v < 80; ++v) {
    auto const f = min_solutions_inhomogeneous(n.generator_matrix(), ZVec(ints({v})));
    for (auto const& gamma : f) {
      CHECK(bar(n, gamma) == q(v, 5));
    }
  }
}

TEST_CASE("two-generated value matches the k-vector formula", "[asymptotic][property]") {
  for (long long alpha = 2; alpha <= 9; ++alpha) {
    for (long long beta = 2; beta <= alpha; ++beta) {
      auto const t = SemigroupSpec::two_gen(alpha, beta);
      for (long long g1 = 0; g1 <= 4; ++g1) {
        for (long long g2 = 0; g2 <= 4; ++g2) {
          CHECK(bar(t, NVec{g1, g2}) == q(g1) + q(alpha, beta) * q(g2));
        }
      }
    }
  }
}

TEST_CASE("ratios stay above the limit and the running minimum approaches it",
          "[asymptotic][property]") {
  std::vector<std::pair<SemigroupSpec, NVec>> fixtures{
      {numerical({3, 5}), NVec{1, 0}},
      {numerical({3, 5}), NVec{0, 1}},
      {numerical({3, 5, 7}), NVec{0, 1, 1}},
      {numerical({5, 7, 11}), NVec{1, 0, 0}},
      {numerical({4, 9, 10}), NVec{0, 0, 1}},
      {SemigroupSpec::two_gen(7, 5), NVec{6, 7}},
      {SemigroupSpec::two_gen(4, 6), NVec{1, 1}},
      {SemigroupSpec::lattice(2, {ZVec(ints({3, -2}))}), NVec{2, 1}},
      {SemigroupSpec::affine({NVec{2, 4}, NVec{3, 6}}), NVec{1, 1}},
  };
  for (auto const& [s, gamma] : fixtures) {
    auto const kv    = k_vector(s);
    auto const limit = bar(s, gamma);
    auto const p     = static_cast<long long>(s.arity());
    Rational   slack = Rational(Integer(p - 1) * kv.kmax);
    for (auto const& k : kv.k) {
      slack += Rational(kv.kmax, k);
    }
    auto const seq    = empirical_ratio_sequence(s, Element::expression(gamma), 30);
    Rational   runmin = seq.front();
    for (std::size_t i = 0; i < seq.size(); ++i) {
      auto const n = static_cast<long long>(i + 1);
      runmin       = std::min(runmin, seq[i]);
      CHECK(seq[i] >= limit);
      CHECK(runmin - limit <= slack / q(n));
    }
  }
}
