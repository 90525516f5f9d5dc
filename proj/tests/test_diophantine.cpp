#include <random>

#include "catch_amalgamated.hpp"

#include "omega/diophantine.hpp"
#include "support/oracle.hpp"

using namespace omega;
using oracle::V;

namespace {
  std::vector<Integer> ints(std::initializer_list<long long> xs) {
    return std::vector<Integer>(xs.begin(), xs.end());
  }

  IntMatrix matrix(std::vector<V> const& rows) {
    std::vector<std::vector<Integer>> r;
    for (auto const& row : rows) {
      r.emplace_back(row.begin(), row.end());
    }
    return IntMatrix::from_rows(r);
  }

  bool is_antichain(Antichain const& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (i != j && componentwise_le(a[i], a[j])) {
          return false;
        }
      }
    }
    return std::is_sorted(a.begin(), a.end());
  }

  // A random numerical semigroup with gcd 1, minimally generated.
  SemigroupSpec random_numerical(std::mt19937_64& rng, int max_p, int max_g) {
    std::uniform_int_distribution<int> pick_p(2, max_p), pick_g(2, max_g);
    for (;;) {
      std::vector<Integer> g;
      for (int i = pick_p(rng); i > 0; --i) {
        g.push_back(pick_g(rng));
      }
      auto s = normalize_spec(SemigroupSpec::numerical(g));
      if (s.arity() >= 2) {
        return s;
      }
    }
  }

  NVec random_gamma(std::mt19937_64& rng, std::size_t p, int max_c) {
    std::uniform_int_distribution<int> pick(0, max_c);
    std::vector<Integer>               g;
    for (std::size_t i = 0; i < p; ++i) {
      g.push_back(pick(rng));
    }
    return NVec(g);
  }

  V gens_of(SemigroupSpec const& s) {
    return oracle::plain(NVec(s.as_numerical().generators));
  }
}  // namespace

TEST_CASE("minimals_filter", "[antichain]") {
  auto const a = minimals_filter({NVec{1, 2}, NVec{2, 1}, NVec{2, 2}});
  CHECK(a.elements() == std::vector<NVec>{NVec{1, 2}, NVec{2, 1}});
  CHECK(minimals_filter({}).empty());
  auto const fig = minimals_filter({NVec{20, 0}, NVec{6, 7}, NVec{0, 12}, NVec{13, 2}});
  CHECK(fig.elements() == std::vector<NVec>{NVec{0, 12}, NVec{6, 7}, NVec{13, 2}, NVec{20, 0}});
  CHECK(minimals_filter({NVec{3, 3}, NVec{3, 3}}).size() == 1);
  CHECK(minimals_filter(fig.elements()) == fig);
  CHECK_THROWS_AS(minimals_filter({NVec{1}, NVec{1, 2}}), omega_error);
  // Entries beyond 32 bits take the arbitrary-precision path.
  Integer const big = Integer(1) << 70;
  auto const    b   = minimals_filter({NVec(std::vector<Integer>{big, 1}),
                                       NVec(std::vector<Integer>{big + 1, 1}), NVec{0, 2}});
  CHECK(b.elements()
        == std::vector<NVec>{NVec{0, 2}, NVec(std::vector<Integer>{big, 1})});
}

TEST_CASE("minimals_filter agrees with the quadratic filter", "[antichain][property]") {
  std::mt19937_64                    rng(3);
  std::uniform_int_distribution<int> pick_n(0, 40), pick_p(1, 4), pick_x(0, 5);
  for (int trial = 0; trial < 300; ++trial) {
    auto const        p = pick_p(rng);
    std::vector<V>    vs;
    std::vector<NVec> ns;
    for (int i = pick_n(rng); i > 0; --i) {
      V v;
      for (int j = 0; j < p; ++j) {
        v.push_back(pick_x(rng));
      }
      vs.push_back(v);
      ns.push_back(oracle::nvec(v));
    }
    auto const a = minimals_filter(ns);
    CHECK(oracle::plain(a) == oracle::minimals(vs));
    CHECK(is_antichain(a));
    CHECK(minimals_filter(a.elements()) == a);
  }
}

TEST_CASE("homogeneous minimal solutions", "[engine]") {
  CHECK(oracle::plain(min_solutions_homogeneous(matrix({{1, -1}}))) == std::vector<V>{{1, 1}});
  CHECK(oracle::plain(min_solutions_homogeneous(matrix({{2, -3}}))) == std::vector<V>{{3, 2}});
  CHECK(oracle::plain(min_solutions_homogeneous(matrix({{3, 5, -15}})))
        == std::vector<V>{{0, 3, 1}, {5, 0, 1}});
  CHECK(min_solutions_homogeneous(matrix({{1, 2}})).empty());
}

TEST_CASE("homogeneous solver is complete up to its largest coordinate",
          "[engine][property]") {
  std::mt19937_64                    rng(5);
  std::uniform_int_distribution<int> pick_n(2, 4), pick_e(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    auto const n = pick_n(rng);
    V          row;
    for (int j = 0; j < n; ++j) {
      row.push_back(pick_e(rng));
    }
    auto const sols = min_solutions_homogeneous(matrix({row}));
    CHECK(is_antichain(sols));
    long long hi = 1;
    for (auto const& x : sols) {
      auto const px = oracle::plain(x);
      CHECK(oracle::dot(row, px) == 0);
      CHECK_FALSE(x.is_zero());
      hi = std::max(hi, *std::max_element(px.begin(), px.end()));
    }
    auto box = oracle::box_solutions({row}, {0}, hi);
    box.erase(std::remove(box.begin(), box.end(), V(n, 0)), box.end());
    CHECK(oracle::plain(sols) == oracle::minimals(box));
  }
}

TEST_CASE("inhomogeneous minimal solutions", "[engine]") {
  CHECK(oracle::plain(min_solutions_inhomogeneous(matrix({{3, 5}}), ZVec(ints({15}))))
        == std::vector<V>{{0, 3}, {5, 0}});
  CHECK(oracle::plain(min_solutions_inhomogeneous(matrix({{1, 0}, {0, 1}}), ZVec(ints({2, 3}))))
        == std::vector<V>{{2, 3}});
  CHECK(oracle::plain(min_solutions_inhomogeneous(matrix({{1}}), ZVec(ints({0}))))
        == std::vector<V>{{0}});
  CHECK(min_solutions_inhomogeneous(matrix({{2, 4}}), ZVec(ints({3}))).empty());
}

TEST_CASE("inhomogeneous solver matches box enumeration", "[engine][property]") {
  std::mt19937_64                    rng(9);
  std::uniform_int_distribution<int> pick_n(2, 4), pick_e(-3, 5), pick_b(0, 12);
  for (int trial = 0; trial < 60; ++trial) {
    auto const n = pick_n(rng);
    V          row;
    for (int j = 0; j < n; ++j) {
      row.push_back(pick_e(rng));
    }
    row[0]       = std::abs(row[0]) + 1;
    long long b  = pick_b(rng);
    auto const s = min_solutions_inhomogeneous(matrix({row}), ZVec(ints({b})));
    long long  hi = 0;
    for (auto const& x : s) {
      auto const px = oracle::plain(x);
      CHECK(oracle::dot(row, px) == b);
      hi = std::max(hi, *std::max_element(px.begin(), px.end()));
    }
    // Every solution in a box reaching past the returned set dominates it.
    CHECK(oracle::plain(s) == oracle::minimals(oracle::box_solutions({row}, {b}, hi + 2)));
  }
}

TEST_CASE("ideal preimage minimals of the reference examples", "[engine]") {
  auto const s  = normalize_spec(SemigroupSpec::numerical(ints({115, 212, 333, 571})));
  auto const gm = membership(s, Integer(10000));
  REQUIRE(gm);
  auto const m = ideal_preimage_minimals(s, *gm);
  CHECK(m.size() == 203);
  CHECK(m.max_norm() == 109);
  CHECK(is_antichain(m));

  auto const a  = SemigroupSpec::affine({NVec{5, 3}, NVec{5, 11}, NVec{2, 7}, NVec{11, 4}});
  auto const ma = ideal_preimage_minimals(a, NVec{3, 5, 2, 10});
  CHECK(ma.size() == 40);
  CHECK(ma.max_norm() == 68);
  CHECK(is_antichain(ma));

  auto const t = SemigroupSpec::two_gen(7, 5);
  CHECK(oracle::plain(ideal_preimage_minimals(t, NVec{6, 7}))
        == std::vector<V>{{0, 12}, {6, 7}, {13, 2}, {20, 0}});
  CHECK(oracle::plain(ideal_preimage_minimals(SemigroupSpec::two_gen(5, 3), NVec{1, 0}))
        == std::vector<V>{{0, 3}, {1, 0}});
  CHECK(oracle::plain(ideal_preimage_minimals(t, NVec{0, 0})) == std::vector<V>{{0, 0}});
}

TEST_CASE("numerical routes agree on the reference example", "[engine][slow]") {
  // The linear-system route on <10,...,19> is the same computation as the
  // value sweep through a different algorithm.
  auto const s = normalize_spec(SemigroupSpec::numerical(ints({10, 11, 12, 13, 14, 15, 16, 17, 18, 19})));
  EngineOptions lin;
  lin.route = EngineRoute::linear_system;
  for (std::size_t i : {0u, 1u}) {
    auto const e = NVec::unit(s.arity(), i);
    CHECK(ideal_preimage_minimals(s, e, lin) == ideal_preimage_minimals(s, e));
  }
}

TEST_CASE("e_membership", "[engine]") {
  auto const s = SemigroupSpec::numerical(ints({3, 5}));
  CHECK(e_membership(s, NVec{1, 0}, NVec{0, 3}));
  CHECK_FALSE(e_membership(s, NVec{1, 0}, NVec{0, 2}));
  CHECK(e_membership(s, NVec{2, 1}, NVec{2, 1}));
  auto const a = SemigroupSpec::affine({NVec{5, 3}, NVec{5, 11}, NVec{2, 7}, NVec{11, 4}});
  CHECK(e_membership(a, NVec{3, 5, 2, 10}, NVec{3, 5, 2, 10}));
  CHECK_FALSE(e_membership(a, NVec{3, 5, 2, 10}, NVec{3, 5, 2, 9}));
  auto const t = SemigroupSpec::two_gen(7, 5);
  CHECK(e_membership(t, NVec{6, 7}, NVec{13, 2}));
  CHECK_FALSE(e_membership(t, NVec{6, 7}, NVec{12, 2}));
}

TEST_CASE("qa_search_bound", "[engine]") {
  CHECK(qa_search_bound(NVec{5, 3}, NVec{1, 0}, 1) == 26);
  CHECK(qa_search_bound(NVec{1}, NVec{4}, 1) == 5);
  Integer const K = 77 * 55 * 35;
  CHECK(qa_search_bound(NVec{77, 55, 35}, NVec{0, 1, 0}, 2)
        == K / 77 + K / 55 + K / 35 + 2 * K + 2 * (K / 55));
  CHECK(qa_search_bound(NVec{77, 55, 35}, NVec{0, 1, 0}, 2) == 310695);
  CHECK(qa_search_bound(NVec{5, 3}, NVec{1, 0}, 2) > qa_search_bound(NVec{5, 3}, NVec{1, 0}, 1));
  CHECK(qa_search_bound(NVec{5, 3}, NVec{1, 1}, 1) > qa_search_bound(NVec{5, 3}, NVec{1, 0}, 1));
}

TEST_CASE("bounded oracle", "[oracle]") {
  auto const s35 = SemigroupSpec::numerical(ints({3, 5}));
  CHECK(required_search_bound(s35, NVec{1, 0}) == 15);
  CHECK(oracle::plain(brute_minimals_bounded(s35, NVec{1, 0}, 15))
        == std::vector<V>{{0, 3}, {1, 0}});
  CHECK(oracle::plain(brute_minimals_bounded(SemigroupSpec::numerical(ints({2, 3})), NVec{1, 0}))
        == std::vector<V>{{0, 2}, {1, 0}});
  CHECK(oracle::plain(brute_minimals_bounded(SemigroupSpec::two_gen(7, 5), NVec{6, 7}))
        == std::vector<V>{{0, 12}, {6, 7}, {13, 2}, {20, 0}});
  try {
    brute_minimals_bounded(s35, NVec{1, 0}, 14);
    FAIL("an unsound bound was accepted");
  } catch (omega_error const& e) {
    CHECK(e.code() == errc::unsound_bound);
  }
}

TEST_CASE("numerical engine matches the test oracle", "[engine][property]") {
  std::mt19937_64 rng(21);
  EngineOptions   lin;
  lin.route = EngineRoute::linear_system;
  for (int trial = 0; trial < 80; ++trial) {
    auto const s     = random_numerical(rng, 4, 15);
    auto const gamma = random_gamma(rng, s.arity(), 4);
    auto const want  = oracle::numerical_ideal_minimals(gens_of(s), oracle::plain(gamma));
    auto const got   = ideal_preimage_minimals(s, gamma);
    CHECK(oracle::plain(got) == want);
    CHECK(brute_minimals_bounded(s, gamma) == got);
    if (trial % 4 == 0) {
      CHECK(ideal_preimage_minimals(s, gamma, lin) == got);
    }
  }
}

TEST_CASE("two-generated engine matches the test oracle", "[engine][property]") {
  std::mt19937_64                    rng(23);
  std::uniform_int_distribution<int> pick_ab(2, 9), pick_g(0, 12);
  for (int trial = 0; trial < 80; ++trial) {
    long long const alpha = pick_ab(rng), beta = pick_ab(rng);
    V const         gamma{pick_g(rng), pick_g(rng)};
    auto const      got = ideal_preimage_minimals(SemigroupSpec::two_gen(alpha, beta),
                                                  oracle::nvec(gamma));
    CHECK(oracle::plain(got) == oracle::two_gen_ideal_minimals(alpha, beta, gamma));
  }
}

TEST_CASE("lattice route on kernel presentations matches the numerical oracle",
          "[engine][lattice][property]") {
  // N^p / ker(s) is the numerical semigroup generated by s, so the lattice
  // route on the kernel must reproduce the numerical minimals.
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    auto const s     = random_numerical(rng, 3, 9);
    auto const gamma = random_gamma(rng, s.arity(), 3);
    auto const l     = SemigroupSpec::lattice(s.arity(), kernel_lattice(s));
    CHECK(oracle::plain(ideal_preimage_minimals(l, gamma))
          == oracle::numerical_ideal_minimals(gens_of(s), oracle::plain(gamma)));
  }
}

TEST_CASE("affine engine matches the numerical oracle on one-row matrices",
          "[engine][property]") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    auto const        s = random_numerical(rng, 3, 9);
    std::vector<NVec> cols;
    for (auto const& g : s.as_numerical().generators) {
      cols.push_back(NVec(std::vector<Integer>{g}));
    }
    auto const gamma = random_gamma(rng, s.arity(), 3);
    CHECK(oracle::plain(ideal_preimage_minimals(SemigroupSpec::affine(cols), gamma))
          == oracle::numerical_ideal_minimals(gens_of(s), oracle::plain(gamma)));
  }
}

TEST_CASE("minimal elements are sound and the ideal is upward closed", "[engine][property]") {
  std::mt19937_64 rng(37);
  std::vector<SemigroupSpec> specs{
      SemigroupSpec::numerical(ints({5, 7, 11})),
      SemigroupSpec::affine({NVec{5, 3}, NVec{5, 11}, NVec{2, 7}, NVec{11, 4}}),
      SemigroupSpec::two_gen(4, 6),
      SemigroupSpec::lattice(3, {ZVec(ints({2, -1, 0})), ZVec(ints({0, 3, -2}))})};
  for (auto const& spec : specs) {
    for (int trial = 0; trial < 5; ++trial) {
      auto const gamma = random_gamma(rng, spec.arity(), 2);
      auto const m     = ideal_preimage_minimals(spec, gamma);
      CHECK(is_antichain(m));
      CHECK(ideal_preimage_minimals(spec, gamma) == m);
      for (auto const& x : m) {
        CHECK(e_membership(spec, gamma, x));
        for (std::size_t i = 0; i < x.size(); ++i) {
          if (x[i] > 0) {
            auto y = x.entries();
            y[i] -= 1;
            CHECK_FALSE(e_membership(spec, gamma, NVec(y)));
          }
          CHECK(e_membership(spec, gamma, x + NVec::unit(x.size(), i)));
        }
      }
    }
  }
}

TEST_CASE("resource limits", "[engine]") {
  auto const    s = normalize_spec(SemigroupSpec::numerical(ints({115, 212, 333, 571})));
  EngineOptions tight;
  tight.limits.max_nodes = 5;
  try {
    ideal_preimage_minimals(s, NVec{73, 6, 1, 0}, tight);
    FAIL("no resource limit raised");
  } catch (omega_error const& e) {
    CHECK(e.code() == errc::resource_limit);
  }
  try {
    min_solutions_homogeneous(matrix({{7, 11, -13, -17}}), SearchLimits{3});
    FAIL("no resource limit raised");
  } catch (omega_error const& e) {
    CHECK(e.code() == errc::resource_limit);
  }
}
