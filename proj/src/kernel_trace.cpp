#include "congnet/kernel_trace.hpp"

#include <map>

#include "congnet/errors.hpp"
#include "congnet/relations.hpp"

namespace congnet {

  namespace {
    std::vector<std::uint32_t>
    idempotent_positions(InverseSemigroup const& S) {
      std::vector<std::uint32_t> position(S.order(), 0);
      auto const&                E = S.idempotents();
      for (std::uint32_t i = 0; i < E.size(); ++i) {
        position[E[i]] = i;
      }
      return position;
    }

    // Groups elements by an arbitrary signature.
    template <typename Signature>
    Partition group_by(std::size_t n, Signature signature) {
      using key_type = decltype(signature(element_type(0)));
      std::map<key_type, std::uint32_t> index;
      std::vector<std::uint32_t>        labels(n);
      for (element_type a = 0; a < n; ++a) {
        auto [it, inserted] = index.emplace(
            signature(a), static_cast<std::uint32_t>(index.size()));
        labels[a] = it->second;
      }
      return Partition::from_labels(labels);
    }
  }  // namespace

  Congruence reconstruct(InverseSemigroup const& S, Partition const& trace,
                         ElementSet const& kernel_set) {
    if (trace.size() != S.idempotents().size()
        || kernel_set.universe() != S.order()) {
      throw IncompatiblePair("trace or kernel has the wrong size");
    }
    auto const  position = idempotent_positions(S);
    std::size_t n        = S.order();
    PairSet     relation(n);
    for (element_type a = 0; a < n; ++a) {
      auto const da = position[S.product(S.inverse(a), a)];
      for (element_type b = 0; b < n; ++b) {
        auto const db = position[S.product(S.inverse(b), b)];
        if (trace.related(da, db)
            && kernel_set.contains(S.product(a, S.inverse(b)))) {
          relation.insert(a, b);
        }
      }
    }
    if (!relation.is_equivalence()) {
      throw IncompatiblePair("trace and kernel do not define an equivalence");
    }
    DisjointSets sets(n);
    for (auto [a, b] : relation.pairs()) {
      sets.unite(a, b);
    }
    auto partition = Partition::from_disjoint_sets(sets);
    if (!is_congruence(S, partition)) {
      throw IncompatiblePair("trace and kernel do not define a congruence");
    }
    Congruence result(S, std::move(partition));
    if (!(result.trace() == trace) || !(result.kernel() == kernel_set)) {
      throw IncompatiblePair("trace and kernel are not those of a congruence");
    }
    return result;
  }

  Quotient quotient(Congruence const& rho) {
    auto const& p    = rho.partition();
    auto const& S    = rho.semigroup();
    auto const  reps = p.representatives();
    Table       table(reps.size(), std::vector<element_type>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = 0; j < reps.size(); ++j) {
        table[i][j] = p.class_of(S.product(reps[i], reps[j]));
      }
    }
    std::vector<element_type> projection(p.labels().begin(),
                                         p.labels().end());
    return {InverseSemigroup::from_table(table), std::move(projection)};
  }

  Congruence pullback(Congruence const& rho, Congruence const& theta_bar) {
    auto const& p = rho.partition();
    if (theta_bar.semigroup().order() != p.number_of_classes()) {
      throw Error("pullback: congruence is not on the quotient");
    }
    std::vector<std::uint32_t> labels(p.size());
    for (element_type a = 0; a < p.size(); ++a) {
      labels[a] = theta_bar.partition().class_of(p.class_of(a));
    }
    return Congruence(rho.semigroup(), Partition::from_labels(labels));
  }

  Congruence min_trace(Congruence const& rho) {
    auto const& S     = rho.semigroup();
    auto        via_f = congruence_closure(S, intersect(rho, relation_F(S)));
    auto        via_c = congruence_closure(S, intersect(rho, relation_C(S)));
    if (!(via_f == via_c)) {
      throw InternalError("min_trace: (rho n F)* != (rho n C)*");
    }
    if (!(via_f.trace() == rho.trace())) {
      throw InternalError("min_trace: trace not preserved");
    }
    return via_f;
  }

  Congruence min_kernel(Congruence const& rho) {
    auto const& S = rho.semigroup();
    auto via_l    = congruence_closure(S, intersect(rho, PairSet::of(green_L(S))));
    auto via_r    = congruence_closure(S, intersect(rho, PairSet::of(green_R(S))));
    if (!(via_l == via_r)) {
      throw InternalError("min_kernel: (rho n L)* != (rho n R)*");
    }
    if (!(via_l.kernel() == rho.kernel())) {
      throw InternalError("min_kernel: kernel not preserved");
    }
    return via_l;
  }

  Congruence max_trace(Congruence const& rho) {
    auto const& S = rho.semigroup();
    auto        p = group_by(S.order(), [&](element_type a) {
      std::vector<std::uint32_t> signature;
      signature.reserve(S.idempotents().size());
      for (auto e : S.idempotents()) {
        signature.push_back(
            rho.partition().class_of(S.product(S.inverse(a), e, a)));
      }
      return signature;
    });
    Congruence result(S, std::move(p));
    if (!(result.trace() == rho.trace()) || !rho.is_subset_of(result)) {
      throw InternalError("max_trace: trace not preserved");
    }
    return result;
  }

  Congruence max_kernel(Congruence const&        rho,
                        CongruenceLattice const& lattice) {
    auto result = lattice.join_of([&rho](Congruence const& theta) {
      return theta.kernel() == rho.kernel();
    });
    if (!result || !(result->kernel() == rho.kernel())) {
      throw InternalError("max_kernel: kernel class not found in lattice");
    }
    return *result;
  }

  Congruence max_kernel(Congruence const& rho, std::size_t cap) {
    return max_kernel(rho, enumerate_congruence_lattice(rho.semigroup(), cap));
  }

  Congruence special_sigma(InverseSemigroup const& S) {
    return min_trace(Congruence::universal(S));
  }

  Congruence special_eta(InverseSemigroup const& S) {
    return min_kernel(Congruence::universal(S));
  }

  Congruence special_mu(InverseSemigroup const& S) {
    return max_trace(Congruence::trivial(S));
  }

  Congruence special_tau(InverseSemigroup const& S) {
    std::vector<std::uint32_t> start(S.order());
    for (element_type a = 0; a < S.order(); ++a) {
      start[a] = S.is_idempotent(a) ? 0 : 1;
    }
    auto current = Partition::from_labels(start);
    while (true) {
      auto next = group_by(S.order(), [&](element_type a) {
        std::vector<std::uint32_t> signature{current.class_of(a)};
        signature.reserve(2 * S.order() + 1);
        for (element_type x = 0; x < S.order(); ++x) {
          signature.push_back(current.class_of(S.product(x, a)));
          signature.push_back(current.class_of(S.product(a, x)));
        }
        return signature;
      });
      if (next.number_of_classes() == current.number_of_classes()) {
        break;
      }
      current = std::move(next);
    }
    return Congruence(S, std::move(current));
  }

}  // namespace congnet
