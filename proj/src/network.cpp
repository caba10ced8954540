#include "congnet/network.hpp"

#include <algorithm>

#include "congnet/errors.hpp"
#include "congnet/kernel_trace.hpp"

namespace congnet {

  MinNetwork::MinNetwork(std::vector<Congruence> alphas,
                         std::vector<Congruence> betas)
      : _alphas(std::move(alphas)), _betas(std::move(betas)) {
    if (_alphas.empty() || _alphas.size() != _betas.size()) {
      throw InternalError("MinNetwork: chains of different lengths");
    }
  }

  Congruence const& MinNetwork::alpha(std::size_t n) const {
    return _alphas[std::min(n, _alphas.size() - 1)];
  }

  Congruence const& MinNetwork::beta(std::size_t n) const {
    return _betas[std::min(n, _betas.size() - 1)];
  }

  NetworkLevel MinNetwork::level(std::size_t n) const {
    return {n, alpha(n), beta(n), meet(alpha(n), beta(n))};
  }

  MinNetwork compute_network(InverseSemigroup const& S, std::size_t max_level) {
    std::vector<Congruence> alphas{Congruence::universal(S)};
    std::vector<Congruence> betas{Congruence::universal(S)};
    for (std::size_t n = 1; n <= max_level; ++n) {
      alphas.push_back(min_trace(betas[n - 1]));
      betas.push_back(min_kernel(alphas[n - 1]));
      if (n >= 2 && alphas[n] == alphas[n - 1] && betas[n] == betas[n - 1]) {
        alphas.pop_back();
        betas.pop_back();
        // One more step must change nothing.
        auto const& a = alphas.back();
        auto const& b = betas.back();
        if (!(min_trace(b) == a) || !(min_kernel(a) == b)) {
          throw InternalError("min network: fixed point check failed");
        }
        return MinNetwork(std::move(alphas), std::move(betas));
      }
    }
    throw NotStabilized(max_level);
  }

  bool verify_sublattice_identity(MinNetwork const& net, std::size_t n) {
    return meet(net.alpha(n - 1), net.beta(n - 1))
           == join(net.alpha(n), net.beta(n));
  }

  bool network_is_sublattice(MinNetwork const& net) {
    std::vector<Congruence> members;
    auto add = [&members](Congruence const& rho) {
      if (std::find(members.begin(), members.end(), rho) == members.end()) {
        members.push_back(rho);
      }
    };
    for (std::size_t n = 0; n <= net.stabilization_level(); ++n) {
      add(net.alpha(n));
      add(net.beta(n));
      add(meet(net.alpha(n), net.beta(n)));
    }
    auto contains = [&members](Congruence const& rho) {
      return std::find(members.begin(), members.end(), rho) != members.end();
    };
    for (auto const& x : members) {
      for (auto const& y : members) {
        if (!contains(meet(x, y)) || !contains(join(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace congnet
