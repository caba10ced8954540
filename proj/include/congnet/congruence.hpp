// Congruences on a finite inverse semigroup, with cached kernel and trace.

#ifndef CONGNET_CONGRUENCE_HPP_
#define CONGNET_CONGRUENCE_HPP_

#include <cstddef>

#include "element_set.hpp"
#include "partition.hpp"
#include "semigroup.hpp"

namespace congnet {

  //! true iff p is compatible with multiplication on both sides.
  bool is_congruence(InverseSemigroup const& S, Partition const& p);

  //! A compatible equivalence on a specific semigroup.
  //!
  //! The kernel is the union of the classes meeting E_S; the trace is the
  //! restriction to E_S, indexed by position in S.idempotents().
  class Congruence {
   public:
    //! Throws NotACongruence if p is not compatible.
    Congruence(InverseSemigroup S, Partition p);

    //! The equality relation, usually written epsilon.
    static Congruence trivial(InverseSemigroup const& S);
    //! The universal relation, usually written omega.
    static Congruence universal(InverseSemigroup const& S);

    InverseSemigroup const& semigroup() const noexcept { return _semigroup; }
    Partition const&        partition() const noexcept { return _partition; }
    ElementSet const&       kernel() const noexcept { return _kernel; }
    Partition const&        trace() const noexcept { return _trace; }

    bool related(element_type a, element_type b) const {
      return _partition.related(a, b);
    }
    std::size_t number_of_classes() const noexcept {
      return _partition.number_of_classes();
    }

    bool is_subset_of(Congruence const& other) const {
      return _partition.is_finer_than(other._partition);
    }
    bool is_trivial() const noexcept {
      return number_of_classes() == _semigroup.order();
    }
    bool is_universal() const noexcept { return number_of_classes() == 1; }
    //! Contained in H, equivalently the trace is trivial.
    bool is_idempotent_separating() const noexcept {
      return _trace.number_of_classes() == _trace.size();
    }
    //! The kernel is exactly E_S.
    bool is_idempotent_pure() const noexcept {
      return _kernel.size() == _semigroup.idempotents().size();
    }

    //! Compares partitions only; both must be on the same semigroup.
    friend bool operator==(Congruence const& x, Congruence const& y) {
      return x._partition == y._partition;
    }

   private:
    InverseSemigroup _semigroup;
    Partition        _partition;
    ElementSet       _kernel;
    Partition        _trace;
  };

  inline ElementSet const& kernel(Congruence const& rho) {
    return rho.kernel();
  }
  inline Partition const& trace(Congruence const& rho) { return rho.trace(); }

  //! Intersection.
  Congruence meet(Congruence const& rho, Congruence const& theta);
  //! Least congruence containing both; equals the equivalence join.
  Congruence join(Congruence const& rho, Congruence const& theta);

}  // namespace congnet

#endif  // CONGNET_CONGRUENCE_HPP_
