#include <doctest.h>

#include "congnet/catalog.hpp"
#include "congnet/kernel_trace.hpp"
#include "congnet/lattice.hpp"
#include "congnet/predicates.hpp"
#include "congnet/relations.hpp"
#include "test_support.hpp"

using namespace congnet;
using test::element;

namespace {
  std::vector<oracle::Labels> library_lattice(InverseSemigroup const& S) {
    std::vector<oracle::Labels> out;
    auto const L = enumerate_congruence_lattice(S);
    for (auto const& rho : L.congruences()) {
      out.push_back(test::labels_of(rho));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
}  // namespace

TEST_CASE("Lattice enumeration agrees with the oracle") {
  for (auto const& entry : catalog()) {
    auto const S = entry.build();
    CAPTURE(entry.name);
    CHECK(library_lattice(S) == oracle::all_congruences(test::as_oracle(S)));
  }
  CHECK(enumerate_congruence_lattice(catalog_entry("B2").build()).size()
        == 2);
  CHECK(enumerate_congruence_lattice(catalog_entry("Chain2").build()).size()
        == 2);
  CHECK(enumerate_congruence_lattice(catalog_entry("Trivial").build()).size()
        == 1);
}

TEST_CASE("Lattice is closed and ordered") {
  auto const L = enumerate_congruence_lattice(catalog_entry("I2xC2").build());
  for (auto const& a : L.congruences()) {
    for (auto const& b : L.congruences()) {
      CHECK(L.index_of(meet(a, b)).has_value());
      CHECK(L.index_of(join(a, b)).has_value());
    }
  }
  CHECK(L[0].number_of_classes() >= L[L.size() - 1].number_of_classes());
  for (auto [lo, hi] : L.hasse_edges()) {
    CHECK(L[lo].is_subset_of(L[hi]));
    CHECK(L[lo] != L[hi]);
  }
}

TEST_CASE("Lattice enumeration is deterministic across thread counts") {
  auto const S  = catalog_entry("I3").build();
  auto const L1 = enumerate_congruence_lattice(S, 40, 1);
  auto const L4 = enumerate_congruence_lattice(S, 40, 4);
  REQUIRE(L1.size() == L4.size());
  for (std::size_t i = 0; i < L1.size(); ++i) {
    CHECK(L1[i] == L4[i]);
  }
  CHECK(L1.hasse_edges() == L4.hasse_edges());
  CHECK_THROWS_AS(enumerate_congruence_lattice(S, 33), LatticeTooLarge);
}

TEST_CASE("Kernel and trace") {
  auto const I2  = catalog_entry("I2").build();
  auto const eps = Congruence::trivial(I2);
  auto const om  = Congruence::universal(I2);
  CHECK(eps.kernel() == I2.idempotent_set());
  CHECK(om.kernel() == ElementSet::full(7));
  CHECK(eps.trace().number_of_classes() == 4);
  CHECK(om.trace().number_of_classes() == 1);

  auto const nu = min_trace(special_eta(I2));
  CHECK(nu.number_of_classes() == 3);
  CHECK(nu.kernel().size() == 6);
  CHECK_FALSE(nu.kernel().contains(element(I2, "[2,1]")));

  CHECK_THROWS_AS(Congruence(I2, Partition::from_labels(
                                     std::vector<std::uint32_t>{
                                         0, 1, 1, 1, 1, 1, 1})),
                  NotACongruence);
}

TEST_CASE("Kernels are full self-conjugate inverse subsemigroups") {
  for (auto const& entry : catalog()) {
    auto const S = entry.build();
    CAPTURE(entry.name);
    auto const L = enumerate_congruence_lattice(S);
    for (auto const& rho : L.congruences()) {
      auto const& K = rho.kernel();
      CHECK(is_full(S, K));
      CHECK(is_inverse_subsemigroup(S, K));
      for (auto k : K.elements()) {
        for (element_type a = 0; a < S.order(); ++a) {
          CHECK(K.contains(S.product(S.inverse(a), k, a)));
        }
      }
    }
  }
}

TEST_CASE("Kernel-trace operators agree with the lattice oracle") {
  for (auto const& entry : catalog()) {
    auto const S   = entry.build();
    auto const O   = test::as_oracle(S);
    auto const all = oracle::all_congruences(O);
    auto const L   = enumerate_congruence_lattice(S);
    CAPTURE(entry.name);
    for (auto const& rho : L.congruences()) {
      auto const p  = test::labels_of(rho);
      auto const tr = oracle::trace(O, p);
      auto const kr = oracle::kernel(O, p);
      auto same_trace = [&](oracle::Labels const& q) {
        return oracle::trace(O, q) == tr;
      };
      auto same_kernel = [&](oracle::Labels const& q) {
        return oracle::kernel(O, q) == kr;
      };
      CHECK(test::labels_of(min_trace(rho)) == *oracle::least(all, same_trace));
      CHECK(test::labels_of(max_trace(rho))
            == *oracle::greatest(all, same_trace));
      CHECK(test::labels_of(min_kernel(rho))
            == *oracle::least(all, same_kernel));
      CHECK(test::labels_of(max_kernel(rho, L))
            == *oracle::greatest(all, same_kernel));
    }
  }
}

TEST_CASE("Sandwich properties of the extremal operators") {
  for (auto const& entry : catalog()) {
    auto const S = entry.build();
    auto const L = enumerate_congruence_lattice(S);
    CAPTURE(entry.name);
    for (auto const& rho : L.congruences()) {
      auto const t = min_trace(rho), T = max_trace(rho);
      auto const k = min_kernel(rho), K = max_kernel(rho, L);
      CHECK(t.is_subset_of(rho));
      CHECK(rho.is_subset_of(T));
      CHECK(t.trace() == rho.trace());
      CHECK(T.trace() == rho.trace());
      CHECK(k.is_subset_of(rho));
      CHECK(rho.is_subset_of(K));
      CHECK(k.kernel() == rho.kernel());
      CHECK(K.kernel() == rho.kernel());
      CHECK(max_kernel(rho) == K);
    }
  }
}

TEST_CASE("Reconstruction from trace and kernel") {
  for (auto const& entry : catalog()) {
    auto const S = entry.build();
    CAPTURE(entry.name);
    auto const L = enumerate_congruence_lattice(S);
    for (auto const& rho : L.congruences()) {
      CHECK(reconstruct(S, rho.trace(), rho.kernel()) == rho);
    }
  }
  auto const B2 = catalog_entry("B2").build();
  auto const om = Congruence::universal(B2);
  CHECK(reconstruct(B2, om.trace(), om.kernel()) == om);
  // tr omega with kernel E is not a congruence pair on B2
  CHECK_THROWS_AS(reconstruct(B2, om.trace(), B2.idempotent_set()),
                  IncompatiblePair);
}

TEST_CASE("Quotients and pullbacks") {
  auto const I2  = catalog_entry("I2").build();
  auto const eta = special_eta(I2);
  auto const q   = quotient(eta);
  CHECK(q.semigroup.order() == 2);
  CHECK(q.semigroup.idempotents().size() == 2);
  for (element_type a = 0; a < 7; ++a) {
    for (element_type b = 0; b < 7; ++b) {
      CHECK(q.projection[I2.product(a, b)]
            == q.semigroup.product(q.projection[a], q.projection[b]));
    }
  }
  CHECK(quotient(Congruence::trivial(I2)).semigroup.table() == I2.table());
  CHECK(quotient(Congruence::universal(I2)).semigroup.order() == 1);
  CHECK(pullback(eta, Congruence::trivial(q.semigroup)) == eta);
  CHECK(pullback(eta, Congruence::universal(q.semigroup)).is_universal());
}

TEST_CASE("Special congruences") {
  for (auto const& name : {"Trivial", "C2", "C4"}) {
    auto const G = catalog_entry(name).build();
    CHECK(special_sigma(G).is_trivial());
    CHECK(special_eta(G).is_universal());
    CHECK(special_mu(G).is_universal());
    CHECK(special_tau(G).is_trivial());
  }
  for (auto const& name : {"Chain2", "Chain4", "Diamond4"}) {
    auto const Y = catalog_entry(name).build();
    CHECK(special_sigma(Y).is_universal());
    CHECK(special_eta(Y).is_trivial());
    CHECK(special_mu(Y).is_trivial());
    CHECK(special_tau(Y).is_universal());
  }
  for (auto const& name : {"B2", "I2", "BC2_2", "I3"}) {
    CHECK(special_sigma(catalog_entry(name).build()).is_universal());
  }
  auto const B2 = catalog_entry("B2").build();
  CHECK(max_trace(Congruence::trivial(B2)).is_trivial());

  for (auto const& entry : catalog()) {
    auto const S   = entry.build();
    auto const O   = test::as_oracle(S);
    auto const all = oracle::all_congruences(O);
    auto const sp  = oracle::special(O, all);
    auto const L   = enumerate_congruence_lattice(S);
    CAPTURE(entry.name);
    CHECK(test::labels_of(special_sigma(S)) == sp.sigma);
    CHECK(test::labels_of(special_eta(S)) == sp.eta);
    CHECK(test::labels_of(special_mu(S)) == sp.mu);
    CHECK(test::labels_of(special_tau(S)) == sp.tau);
    CHECK(special_sigma(S) == min_trace(Congruence::universal(S)));
    CHECK(special_eta(S) == min_kernel(Congruence::universal(S)));
    CHECK(special_mu(S) == max_trace(Congruence::trivial(S)));
    CHECK(special_tau(S) == max_kernel(Congruence::trivial(S), L));
    CHECK(special_mu(S).partition().is_finer_than(green_H(S)));
    CHECK(PairSet::of(special_tau(S).partition())
              .is_subset_of(relation_C(S)));
    CHECK(special_tau(S).kernel() == S.idempotent_set());
    CHECK(is_fundamental(S) == special_mu(S).is_trivial());
    CHECK(is_e_disjunctive(S) == special_tau(S).is_trivial());
  }
}

TEST_CASE("mu is the greatest congruence inside H") {
  for (auto const& entry : catalog()) {
    auto const S = entry.build();
    auto const H = green_H(S);
    auto const L = enumerate_congruence_lattice(S);
    CAPTURE(entry.name);
    auto const inside = L.join_of([&](Congruence const& rho) {
      return rho.partition().is_finer_than(H);
    });
    CHECK(inside == special_mu(S));
  }
}

TEST_CASE("Meet and join") {
  auto const I2    = catalog_entry("I2").build();
  auto const sigma = special_sigma(I2);
  auto const eta   = special_eta(I2);
  CHECK(meet(sigma, eta) == eta);
  CHECK(join(eta, Congruence::trivial(I2)) == eta);
  CHECK(meet(eta, Congruence::universal(I2)) == eta);
}
