#include <doctest.h>

#include "congnet/catalog.hpp"
#include "congnet/kernel_trace.hpp"
#include "congnet/lattice.hpp"
#include "congnet/network.hpp"
#include "congnet/relations.hpp"
#include "congnet/verifiers.hpp"
#include "test_support.hpp"

using namespace congnet;

namespace {
  constexpr int TRIALS = 60;

  // Random closures, each with its lattice.
  template <typename F>
  void for_random(std::uint32_t seed, std::size_t max_order, F&& f) {
    std::mt19937 rng(seed);
    for (int trial = 0; trial < TRIALS; ++trial) {
      auto const S = test::random_semigroup(rng, 4, max_order);
      auto const L = enumerate_congruence_lattice(S);
      CAPTURE(trial);
      f(S, L);
    }
  }

  bool same_trace(Congruence const& a, Congruence const& b) {
    return a.trace() == b.trace();
  }
  bool same_kernel(Congruence const& a, Congruence const& b) {
    return a.kernel() == b.kernel();
  }
}  // namespace

TEST_CASE("Trace and kernel determine a congruence") {
  for_random(1, 24, [](auto const& S, auto const& L) {
    for (auto const& rho : L.congruences()) {
      CHECK(reconstruct(S, rho.trace(), rho.kernel()) == rho);
    }
  });
}

TEST_CASE("Least congruences from F, C, L and R") {
  for_random(2, 20, [](auto const& S, auto const& L) {
    auto const F  = relation_F(S);
    auto const C  = relation_C(S);
    auto const GL = PairSet::of(green_L(S));
    auto const GR = PairSet::of(green_R(S));
    for (auto const& rho : L.congruences()) {
      auto const by_f = congruence_closure(S, intersect(rho, F));
      auto const by_l = congruence_closure(S, intersect(rho, GL));
      CHECK(by_f == congruence_closure(S, intersect(rho, C)));
      CHECK(by_l == congruence_closure(S, intersect(rho, GR)));
      CHECK(by_f == *L.least([&](auto const& t) { return same_trace(t, rho); }));
      CHECK(by_l
            == *L.least([&](auto const& t) { return same_kernel(t, rho); }));
      CHECK(by_f == min_trace(rho));
      CHECK(by_l == min_kernel(rho));
    }
  });
}

TEST_CASE("Closure is extensive, monotone and idempotent") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < TRIALS; ++trial) {
    auto const S = test::random_semigroup(rng, 4, 24);
    CAPTURE(trial);
    std::size_t const         n = S.order();
    std::vector<ElementPair> small, large;
    for (int i = 0; i < 3; ++i) {
      auto const a = static_cast<element_type>(rng() % n);
      auto const b = static_cast<element_type>(rng() % n);
      small.emplace_back(a, b);
      large.emplace_back(a, b);
    }
    large.emplace_back(static_cast<element_type>(rng() % n),
                       static_cast<element_type>(rng() % n));
    auto const rs = congruence_closure(S, small);
    auto const rl = congruence_closure(S, large);
    for (auto [a, b] : small) {
      CHECK(rs.related(a, b));
    }
    CHECK(rs.is_subset_of(rl));
    CHECK(congruence_closure(S, PairSet::of(rs.partition())) == rs);
    CHECK(is_congruence(S, rs.partition()));
  }
}

TEST_CASE("Kernel of rho_t: a in ker rho_t iff ae = e rho a^-1 a for some e") {
  for_random(4, 20, [](auto const& S, auto const& L) {
    for (auto const& rho : L.congruences()) {
      auto const K = min_trace(rho).kernel();
      for (element_type a = 0; a < S.order(); ++a) {
        bool witness = false;
        for (auto e : S.idempotents()) {
          witness = witness
                    || (S.product(a, e) == e
                        && rho.related(e, S.product(S.inverse(a), a)));
        }
        CHECK(K.contains(a) == witness);
      }
    }
  });
}

TEST_CASE("tau and mu are extremal") {
  for_random(5, 24, [](auto const& S, auto const& L) {
    auto const eps = Congruence(S, Partition::discrete(S.order()));
    auto const tau = special_tau(S);
    CHECK(tau == max_kernel(eps, L));
    CHECK(tau.kernel() == S.idempotent_set());
    CHECK(PairSet::of(tau.partition()).is_subset_of(relation_C(S)));
    auto const H  = green_H(S);
    auto const mu = special_mu(S);
    CHECK(mu.partition().is_finer_than(H));
    CHECK(mu == *L.join_of([&](Congruence const& r) {
      return r.partition().is_finer_than(H);
    }));
  });
}

TEST_CASE("Natural order is a partial order compatible with products") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < TRIALS; ++trial) {
    auto const S = test::random_semigroup(rng, 4, 24);
    CAPTURE(trial);
    auto const n = static_cast<element_type>(S.order());
    for (element_type a = 0; a < n; ++a) {
      CHECK(natural_leq(S, a, a));
      for (element_type b = 0; b < n; ++b) {
        CHECK(natural_leq(S, a, b) == natural_leq_right(S, a, b));
        if (a != b && natural_leq(S, a, b)) {
          CHECK_FALSE(natural_leq(S, b, a));
        }
        for (element_type c = 0; c < n; ++c) {
          if (natural_leq(S, a, b) && natural_leq(S, b, c)) {
            CHECK(natural_leq(S, a, c));
          }
          if (natural_leq(S, a, b)) {
            CHECK(natural_leq(S, S.product(a, c), S.product(b, c)));
          }
        }
      }
    }
  }
}

TEST_CASE("Network invariants on random closures") {
  for_random(7, 24, [](auto const& S, auto const&) {
    auto const net = compute_network(S);
    auto const N   = net.stabilization_level();
    for (std::size_t n = 1; n <= N + 1; ++n) {
      CHECK(net.alpha(n).is_subset_of(net.alpha(n - 1)));
      CHECK(net.beta(n).is_subset_of(net.beta(n - 1)));
      CHECK(verify_sublattice_identity(net, n));
    }
    CHECK(net.alpha(N) == min_trace(net.beta(N)));
    CHECK(net.beta(N) == min_kernel(net.alpha(N)));
    CHECK(network_is_sublattice(net));
  });
}

TEST_CASE("Suites agree on random closures") {
  for_random(8, 16, [](auto const& S, auto const&) {
    Analysis const A(S);
    for (std::size_t n = 1; n <= 3; ++n) {
      auto const k = suite_kercliff(A, n);
      auto const b = suite_boeu(A, n);
      CHECK_MESSAGE(k.all_agree(), k.vector_string());
      CHECK_MESSAGE(b.all_agree(), b.vector_string());
      CHECK(check_prop_ker(A, n));
    }
    CHECK(check_coincidences(A).all_agree());
  });
}

TEST_CASE("Bounded search for a converse witness") {
  std::mt19937 rng(215);
  int          found = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    Analysis const A(test::random_semigroup(rng, 4, 40),
                     {.lattice_cap = 0, .max_level = DEFAULT_MAX_LEVEL,
                      .threads = 1});
    found += is_converse_counterexample(A) ? 1 : 0;
  }
  CHECK(found == 0);
}
