// Builders for the standard families of finite inverse semigroups, and the
// bundled catalog used by the tests and the command line tool.

#ifndef CONGNET_CATALOG_HPP_
#define CONGNET_CATALOG_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "semigroup.hpp"

namespace congnet {

  //! Largest degree accepted by build_symmetric_inverse_monoid.
  constexpr std::size_t MAX_SYMMETRIC_DEGREE = 4;

  //! All partial injections of {1, ..., n} under composition, 1 <= n <= 4.
  //! Elements are listed in increasing order of their image vectors.
  InverseSemigroup build_symmetric_inverse_monoid(std::size_t n);

  //! Throws InvalidSemigroup(not_a_group) when the table is an inverse
  //! semigroup with more than one idempotent.
  InverseSemigroup build_group(Table const& table);

  //! Throws InvalidSemigroup(not_a_semilattice) unless every element is
  //! idempotent.
  InverseSemigroup build_semilattice(Table const& meet);

  //! B(G, n). Element 0 is the zero; (i, g, j) with i, j < n has index
  //! 1 + (i * n + j) * |G| + g.
  InverseSemigroup build_brandt(Table const& group, std::size_t n);

  //! The homomorphism G_from -> G_to attached to from >= to in the
  //! semilattice.
  struct LinkingMap {
    element_type              from;
    element_type              to;
    std::vector<element_type> images;
  };

  //! Strong semilattice of groups. Group G_e sits at semilattice point e and
  //! (e, g) has index offset(e) + g, points taken in order. A map must be
  //! given for every pair e > f; identity maps on e = e may be omitted.
  //! Throws InvalidSemigroup(maps_not_functorial) when a map is missing, is
  //! not a homomorphism, or the maps do not compose.
  InverseSemigroup build_clifford(Table const&              semilattice,
                                  std::vector<Table> const& groups,
                                  std::vector<LinkingMap> const& maps);

  //! (s, t) has index s * |T| + t.
  InverseSemigroup direct_product(InverseSemigroup const& S,
                                  InverseSemigroup const& T);

  Table cyclic_group_table(std::size_t n);
  //! Meet table of the chain 0 < 1 < ... < n - 1.
  Table chain_table(std::size_t n);

  struct CatalogEntry {
    std::string                       name;
    std::string                       description;
    std::function<InverseSemigroup()> build;
  };

  //! The bundled corpus, in a fixed order.
  std::vector<CatalogEntry> const& catalog();
  //! Throws Error for an unknown name.
  CatalogEntry const& catalog_entry(std::string_view name);

}  // namespace congnet

#endif  // CONGNET_CATALOG_HPP_
