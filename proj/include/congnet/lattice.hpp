// Exhaustive enumeration of the congruence lattice of a small semigroup.

#ifndef CONGNET_LATTICE_HPP_
#define CONGNET_LATTICE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "semigroup.hpp"

namespace congnet {

  constexpr std::size_t DEFAULT_LATTICE_CAP = 40;

  //! Every congruence on a semigroup, in a canonical order: decreasing
  //! number of classes, ties broken by class labels. The trivial
  //! congruence is first and the universal one last.
  class CongruenceLattice {
   public:
    CongruenceLattice(InverseSemigroup S, std::vector<Congruence> all);

    InverseSemigroup const&        semigroup() const noexcept { return _S; }
    std::vector<Congruence> const& congruences() const noexcept {
      return _all;
    }
    std::size_t       size() const noexcept { return _all.size(); }
    Congruence const& operator[](std::size_t i) const { return _all[i]; }

    std::optional<std::size_t> index_of(Congruence const& rho) const;

    //! Pairs (i, j) where congruence j covers congruence i.
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

    //! Meet of every member satisfying pred, or nullopt if there is none.
    std::optional<Congruence>
    meet_of(std::function<bool(Congruence const&)> const& pred) const;
    std::optional<Congruence>
    join_of(std::function<bool(Congruence const&)> const& pred) const;

    //! The member satisfying pred that is contained in every other such
    //! member, if one exists.
    std::optional<Congruence>
    least(std::function<bool(Congruence const&)> const& pred) const;

   private:
    InverseSemigroup        _S;
    std::vector<Congruence> _all;
  };

  //! All principal congruences (a, b)* are computed, possibly on several
  //! threads, then closed under joins. Throws LatticeTooLarge when the
  //! order exceeds cap. The result does not depend on threads.
  CongruenceLattice enumerate_congruence_lattice(InverseSemigroup const& S,
                                                 std::size_t cap
                                                 = DEFAULT_LATTICE_CAP,
                                                 unsigned threads = 1);

}  // namespace congnet

#endif  // CONGNET_LATTICE_HPP_
