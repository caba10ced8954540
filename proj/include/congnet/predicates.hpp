// Class membership tests for inverse semigroups and the implication
// families (A_n), (B_n), (A_n'), (B_n').

#ifndef CONGNET_PREDICATES_HPP_
#define CONGNET_PREDICATES_HPP_

#include <cstddef>
#include <string>

#include "congruence.hpp"
#include "element_set.hpp"
#include "network.hpp"
#include "semigroup.hpp"

namespace congnet {

  // The two-argument forms test an inverse subsemigroup K of S as a
  // semigroup in its own right.

  //! Idempotents commute with every element.
  bool is_clifford(InverseSemigroup const& S);
  bool is_clifford(InverseSemigroup const& S, ElementSet const& K);

  //! ey = e with e idempotent forces y idempotent. The equivalent form
  //! xy = x => y^2 = y is evaluated as well; InternalError if they differ.
  bool is_e_unitary(InverseSemigroup const& S);
  bool is_e_unitary(InverseSemigroup const& S, ElementSet const& K);

  //! exy idempotent forces eyx idempotent, for e idempotent.
  bool is_e_reflexive(InverseSemigroup const& S);
  bool is_e_reflexive(InverseSemigroup const& S, ElementSet const& K);

  //! mu is trivial.
  bool is_fundamental(InverseSemigroup const& S);
  //! tau is trivial.
  bool is_e_disjunctive(InverseSemigroup const& S);

  //! Every class of rho containing an idempotent (these are exactly the
  //! classes that are subsemigroups) is E-unitary.
  bool is_over_e_unitary(Congruence const& rho);

  //! ker alpha_n is a Clifford semigroup.
  bool is_ker_alpha_n_clifford(MinNetwork const& net, std::size_t n);
  //! ker alpha_n is E-reflexive.
  bool is_ker_alpha_n_e_reflexive(MinNetwork const& net, std::size_t n);
  //! e beta_n is E-unitary for every idempotent e.
  bool is_beta_n_over_e_unitary(MinNetwork const& net, std::size_t n);

  enum class Family { A, B, A_prime, B_prime };

  std::string to_string(Family family);
  //! Accepts "A", "B", "Aprime", "Bprime" (also "A'", "B'").
  Family family_from_string(std::string const& name);

  struct ImplicationSpec {
    Family      family;
    std::size_t n;
  };

  //! Exhaustive check over all pairs (x, y) of net.semigroup(). The
  //! congruences referenced by the implication are taken from net.
  //!
  //!   A_0, B_0, A_0', B_0':  x = y
  //!   A_1, A_1':             x^-1 x = y^-1 y
  //!   A_2, A_2':             y in E zeta
  //!   B_1, B_1':             y in E
  //!   A_n  (n >= 3):  xy = x, x beta_{n-3} y              => y in E zeta
  //!   A_n' (n >= 3):  xy = x, x^-1 x alpha_{n-2} y y^-1   => y in E zeta
  //!   B_n  (n >= 2):  xy = x, x beta_{n-2} y              => y in E
  //!   B_n' (n >= 2):  xy = x, x^-1 x alpha_{n-1} y y^-1   => y in E
  bool satisfies_implication(MinNetwork const& net, ImplicationSpec spec);

}  // namespace congnet

#endif  // CONGNET_PREDICATES_HPP_
