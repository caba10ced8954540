// The min network: alpha_0 = beta_0 = omega, alpha_n = (beta_{n-1})_t,
// beta_n = (alpha_{n-1})_k.

#ifndef CONGNET_NETWORK_HPP_
#define CONGNET_NETWORK_HPP_

#include <cstddef>
#include <vector>

#include "congruence.hpp"
#include "semigroup.hpp"

namespace congnet {

  struct NetworkLevel {
    std::size_t n;
    Congruence  alpha;
    Congruence  beta;
    //! alpha n beta
    Congruence meet;
  };

  //! Both chains of the min network up to the level where they stop
  //! changing.
  //!
  //! The stabilization level N is the least n >= 1 with alpha_{n+1} =
  //! alpha_n and beta_{n+1} = beta_n. alpha(k) and beta(k) accept any k;
  //! for k > N they return alpha_N and beta_N.
  class MinNetwork {
   public:
    MinNetwork(std::vector<Congruence> alphas, std::vector<Congruence> betas);

    InverseSemigroup const& semigroup() const noexcept {
      return _alphas.front().semigroup();
    }
    std::size_t stabilization_level() const noexcept {
      return _alphas.size() - 1;
    }

    Congruence const& alpha(std::size_t n) const;
    Congruence const& beta(std::size_t n) const;
    NetworkLevel      level(std::size_t n) const;

    //! Least group congruence, alpha_1.
    Congruence const& sigma() const { return alpha(1); }
    //! Least Clifford congruence, alpha_2.
    Congruence const& nu() const { return alpha(2); }
    //! Least semilattice congruence, beta_1.
    Congruence const& eta() const { return beta(1); }
    //! Least E-unitary congruence, beta_2.
    Congruence const& pi() const { return beta(2); }
    //! Least E-reflexive congruence, beta_3.
    Congruence const& lambda() const { return beta(3); }

   private:
    std::vector<Congruence> _alphas;
    std::vector<Congruence> _betas;
  };

  constexpr std::size_t DEFAULT_MAX_LEVEL = 64;

  //! Throws NotStabilized if no level n < max_level is a fixed point.
  MinNetwork compute_network(InverseSemigroup const& S,
                             std::size_t max_level = DEFAULT_MAX_LEVEL);

  //! alpha_{n-1} n beta_{n-1} == alpha_n v beta_n.
  bool verify_sublattice_identity(MinNetwork const& net, std::size_t n);

  //! The alphas, betas and their pairwise meets are closed under meet and
  //! join.
  bool network_is_sublattice(MinNetwork const& net);

}  // namespace congnet

#endif  // CONGNET_NETWORK_HPP_
