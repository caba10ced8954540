#include <doctest.h>

#include "congnet/catalog.hpp"
#include "congnet/kernel_trace.hpp"
#include "congnet/lattice.hpp"
#include "congnet/network.hpp"
#include "congnet/predicates.hpp"
#include "test_support.hpp"

using namespace congnet;

namespace {
  Congruence universal(InverseSemigroup const& S) {
    return Congruence(S, Partition::universal(S.order()));
  }

  // Least congruence in the lattice whose quotient passes pred.
  std::optional<Congruence>
  least_with_quotient(CongruenceLattice const&                      L,
                      std::function<bool(InverseSemigroup const&)> pred) {
    return L.least([&](Congruence const& rho) {
      return pred(quotient(rho).semigroup);
    });
  }
}  // namespace

TEST_CASE("Min network agrees with the brute-force oracle") {
  for (auto const& entry : catalog()) {
    auto const S = entry.build();
    if (S.order() > 14) {
      continue;
    }
    CAPTURE(entry.name);
    auto const O   = test::as_oracle(S);
    auto const net = compute_network(S);
    auto const ref = oracle::network(O, oracle::all_congruences(O));
    REQUIRE(net.stabilization_level() == ref.level);
    for (std::size_t n = 0; n <= ref.level; ++n) {
      CAPTURE(n);
      CHECK(test::labels_of(net.alpha(n)) == ref.alpha[n]);
      CHECK(test::labels_of(net.beta(n)) == ref.beta[n]);
    }
  }
}

TEST_CASE("Min network matches the golden manifest") {
  auto const golden = test::golden_manifest();
  for (auto const& entry : catalog()) {
    CAPTURE(entry.name);
    REQUIRE(golden.contains(entry.name));
    auto const& facts = golden.at(entry.name);
    auto const  net   = compute_network(entry.build());
    auto const  N     = std::stoul(facts.at("stabilization_level"));
    CHECK(net.stabilization_level() == N);
    for (std::size_t n = 0; n <= N; ++n) {
      CHECK(emit_cng1(net.alpha(n).partition()) == facts.at("alpha." + std::to_string(n)));
      CHECK(emit_cng1(net.beta(n).partition()) == facts.at("beta." + std::to_string(n)));
    }
  }
}

TEST_CASE("Min network on I2") {
  auto const S   = catalog_entry("I2").build();
  auto const net = compute_network(S);
  CHECK(net.stabilization_level() == 3);

  std::vector<std::size_t> alpha_classes, beta_classes;
  for (std::size_t n = 0; n <= 5; ++n) {
    alpha_classes.push_back(net.alpha(n).number_of_classes());
    beta_classes.push_back(net.beta(n).number_of_classes());
  }
  CHECK(alpha_classes == std::vector<std::size_t>{1, 1, 3, 3, 3, 3});
  CHECK(beta_classes == std::vector<std::size_t>{1, 2, 2, 3, 3, 3});

  CHECK(net.sigma().is_universal());
  CHECK(net.eta() == special_eta(S));
  CHECK(net.pi() == net.eta());
  CHECK(net.lambda() == net.nu());
  CHECK(emit_cng1(net.nu().partition()) == "0,1,2,1,1,1,1");
  CHECK(net.alpha(3) == net.nu());
  CHECK(net.beta(3) == net.nu());
  // The chains stop at nu; nothing below it is reached.
  CHECK_FALSE(net.alpha(5).is_trivial());
}

TEST_CASE("Min network on B2 and on groups") {
  auto const B2  = catalog_entry("B2").build();
  auto const net = compute_network(B2);
  CHECK(net.stabilization_level() == 1);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(net.alpha(n).is_universal());
    CHECK(net.beta(n).is_universal());
  }

  for (auto name : {"Trivial", "C2", "C4"}) {
    CAPTURE(name);
    auto const G = catalog_entry(name).build();
    auto const g = compute_network(G);
    CHECK(g.beta(1).is_universal());
    for (std::size_t n = 1; n <= 4; ++n) {
      CHECK(g.alpha(n).is_trivial());
      if (n >= 2) {
        CHECK(g.beta(n).is_trivial());
      }
    }
  }
  CHECK(compute_network(catalog_entry("Trivial").build()).stabilization_level()
        == 1);
}

TEST_CASE("Network recursion and descending chains") {
  for (auto const& entry : catalog()) {
    auto const S = entry.build();
    CAPTURE(entry.name);
    auto const net = compute_network(S);
    CHECK(net.alpha(0) == universal(S));
    CHECK(net.beta(0) == universal(S));
    for (std::size_t n = 1; n <= net.stabilization_level() + 1; ++n) {
      CAPTURE(n);
      CHECK(net.alpha(n) == min_trace(net.beta(n - 1)));
      CHECK(net.beta(n) == min_kernel(net.alpha(n - 1)));
      CHECK(net.alpha(n).is_subset_of(net.alpha(n - 1)));
      CHECK(net.beta(n).is_subset_of(net.beta(n - 1)));
      CHECK(net.alpha(n).trace() == net.beta(n - 1).trace());
      CHECK(net.beta(n).kernel() == net.alpha(n - 1).kernel());
      CHECK(net.level(n).meet == meet(net.alpha(n), net.beta(n)));
    }
    auto const N = net.stabilization_level();
    CHECK(net.alpha(N) == min_trace(net.beta(N)));
    CHECK(net.beta(N) == min_kernel(net.alpha(N)));
  }
}

TEST_CASE("Sublattice identity and closure") {
  for (auto const& entry : catalog()) {
    auto const S = entry.build();
    CAPTURE(entry.name);
    auto const net = compute_network(S);
    for (std::size_t n = 1; n <= net.stabilization_level() + 1; ++n) {
      CAPTURE(n);
      CHECK(verify_sublattice_identity(net, n));
    }
    CHECK(network_is_sublattice(net));
  }
  auto const I2  = catalog_entry("I2").build();
  auto const net = compute_network(I2);
  CHECK(meet(net.alpha(1), net.beta(1)) == net.eta());
  CHECK(join(net.alpha(2), net.beta(2)) == net.eta());
}

TEST_CASE("Aliases are the least Clifford, E-unitary and E-reflexive "
          "congruences") {
  for (auto const& entry : catalog()) {
    auto const S = entry.build();
    if (S.order() > 14) {
      continue;
    }
    CAPTURE(entry.name);
    auto const net = compute_network(S);
    auto const L   = enumerate_congruence_lattice(S);
    auto is_group  = [](InverseSemigroup const& Q) {
      return Q.idempotents().size() == 1;
    };
    auto is_semilattice = [](InverseSemigroup const& Q) {
      return Q.idempotents().size() == Q.order();
    };
    auto clifford  = [](InverseSemigroup const& Q) { return is_clifford(Q); };
    auto eunitary  = [](InverseSemigroup const& Q) { return is_e_unitary(Q); };
    auto ereflexive = [](InverseSemigroup const& Q) {
      return is_e_reflexive(Q);
    };
    CHECK(least_with_quotient(L, is_group) == net.sigma());
    CHECK(least_with_quotient(L, is_semilattice) == net.eta());
    CHECK(least_with_quotient(L, clifford) == net.nu());
    CHECK(least_with_quotient(L, eunitary) == net.pi());
    CHECK(least_with_quotient(L, ereflexive) == net.lambda());
  }
}

TEST_CASE("NotStabilized when the level cap is too small") {
  auto const I2 = catalog_entry("I2").build();
  CHECK_THROWS_AS(compute_network(I2, 3), NotStabilized);
  CHECK_NOTHROW(compute_network(I2, 4));
  CHECK_THROWS_AS(compute_network(I2, 1), NotStabilized);
  CHECK_NOTHROW(compute_network(catalog_entry("B2").build(), 2));
}

TEST_CASE("Random closures: network against the oracle") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 40; ++trial) {
    auto const S = test::random_semigroup(rng, 4, 12);
    CAPTURE(trial);
    auto const O   = test::as_oracle(S);
    auto const net = compute_network(S);
    auto const ref = oracle::network(O, oracle::all_congruences(O));
    REQUIRE(net.stabilization_level() == ref.level);
    for (std::size_t n = 0; n <= ref.level; ++n) {
      CHECK(test::labels_of(net.alpha(n)) == ref.alpha[n]);
      CHECK(test::labels_of(net.beta(n)) == ref.beta[n]);
    }
    CHECK(network_is_sublattice(net));
  }
}
