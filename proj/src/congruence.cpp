#include "congnet/congruence.hpp"

#include "congnet/errors.hpp"

namespace congnet {

  bool is_congruence(InverseSemigroup const& S, Partition const& p) {
    if (p.size() != S.order()) {
      return false;
    }
    // Comparing every element with the least element of its class suffices.
    auto const reps = p.representatives();
    for (element_type a = 0; a < S.order(); ++a) {
      element_type const r = reps[p.class_of(a)];
      if (r == a) {
        continue;
      }
      for (element_type x = 0; x < S.order(); ++x) {
        if (!p.related(S.product(x, a), S.product(x, r))
            || !p.related(S.product(a, x), S.product(r, x))) {
          return false;
        }
      }
    }
    return true;
  }

  Congruence::Congruence(InverseSemigroup S, Partition p)
      : _semigroup(std::move(S)), _partition(std::move(p)) {
    if (!is_congruence(_semigroup, _partition)) {
      throw NotACongruence("partition is not a congruence");
    }
    _kernel = ElementSet(_semigroup.order());
    std::vector<bool> meets_e(_partition.number_of_classes(), false);
    for (auto e : _semigroup.idempotents()) {
      meets_e[_partition.class_of(e)] = true;
    }
    for (element_type a = 0; a < _semigroup.order(); ++a) {
      if (meets_e[_partition.class_of(a)]) {
        _kernel.insert(a);
      }
    }
    _trace = _partition.restricted_to(_semigroup.idempotents());
  }

  Congruence Congruence::trivial(InverseSemigroup const& S) {
    return Congruence(S, Partition::discrete(S.order()));
  }

  Congruence Congruence::universal(InverseSemigroup const& S) {
    return Congruence(S, Partition::universal(S.order()));
  }

  Congruence meet(Congruence const& rho, Congruence const& theta) {
    return Congruence(rho.semigroup(),
                      rho.partition().meet(theta.partition()));
  }

  Congruence join(Congruence const& rho, Congruence const& theta) {
    return Congruence(rho.semigroup(),
                      rho.partition().join(theta.partition()));
  }

}  // namespace congnet
