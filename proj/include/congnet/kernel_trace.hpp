// Kernel-trace machinery: reconstruction, quotients, the operators
// rho_t, rho_k, rho^T, rho^K and the special congruences.

#ifndef CONGNET_KERNEL_TRACE_HPP_
#define CONGNET_KERNEL_TRACE_HPP_

#include <vector>

#include "congruence.hpp"
#include "lattice.hpp"
#include "semigroup.hpp"

namespace congnet {

  //! The relation a ~ b iff a^-1 a and b^-1 b are related by trace and
  //! a b^-1 lies in kernel_set. Throws IncompatiblePair unless this is a
  //! congruence whose trace and kernel are exactly the ones given.
  //! trace is indexed by position in S.idempotents().
  Congruence reconstruct(InverseSemigroup const& S, Partition const& trace,
                         ElementSet const& kernel_set);

  struct Quotient {
    InverseSemigroup semigroup;
    //! projection[a] is the class of a, an element of semigroup.
    std::vector<element_type> projection;
  };

  //! S / rho, with classes numbered as in rho.partition().
  Quotient quotient(Congruence const& rho);

  //! The congruence theta containing rho with theta / rho = theta_bar,
  //! where theta_bar is a congruence on quotient(rho).semigroup.
  Congruence pullback(Congruence const& rho, Congruence const& theta_bar);

  //! rho_t, the least congruence with the trace of rho, computed as
  //! (rho n F)*. Also computes (rho n C)* and throws InternalError if the
  //! two differ.
  Congruence min_trace(Congruence const& rho);
  //! rho_k, the least congruence with the kernel of rho, computed as
  //! (rho n L)* and checked against (rho n R)*.
  Congruence min_kernel(Congruence const& rho);
  //! rho^T: a ~ b iff a^-1 e a rho b^-1 e b for every idempotent e.
  Congruence max_trace(Congruence const& rho);
  //! rho^K, the join of all congruences in lattice with the kernel of rho.
  Congruence max_kernel(Congruence const& rho,
                        CongruenceLattice const& lattice);
  //! As above, enumerating the lattice first (may throw LatticeTooLarge).
  Congruence max_kernel(Congruence const& rho,
                        std::size_t cap = DEFAULT_LATTICE_CAP);

  //! Least group congruence, omega_t.
  Congruence special_sigma(InverseSemigroup const& S);
  //! Least semilattice congruence, omega_k.
  Congruence special_eta(InverseSemigroup const& S);
  //! Greatest idempotent separating congruence, epsilon^T.
  Congruence special_mu(InverseSemigroup const& S);
  //! Greatest idempotent pure congruence: the largest congruence
  //! saturating E_S, found by refining {E_S, S \ E_S} until compatible.
  Congruence special_tau(InverseSemigroup const& S);

}  // namespace congnet

#endif  // CONGNET_KERNEL_TRACE_HPP_
