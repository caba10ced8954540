#include "congnet/lattice.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "congnet/errors.hpp"
#include "congnet/relations.hpp"

namespace congnet {

  namespace {
    bool canonical_less(Congruence const& x, Congruence const& y) {
      if (x.number_of_classes() != y.number_of_classes()) {
        return x.number_of_classes() > y.number_of_classes();
      }
      return x.partition() < y.partition();
    }
  }  // namespace

  CongruenceLattice::CongruenceLattice(InverseSemigroup        S,
                                       std::vector<Congruence> all)
      : _S(std::move(S)), _all(std::move(all)) {
    std::sort(_all.begin(), _all.end(), canonical_less);
    _all.erase(std::unique(_all.begin(), _all.end()), _all.end());
  }

  std::optional<std::size_t>
  CongruenceLattice::index_of(Congruence const& rho) const {
    auto it = std::lower_bound(_all.begin(), _all.end(), rho, canonical_less);
    if (it != _all.end() && *it == rho) {
      return static_cast<std::size_t>(it - _all.begin());
    }
    return std::nullopt;
  }

  std::vector<std::pair<std::size_t, std::size_t>>
  CongruenceLattice::hasse_edges() const {
    std::size_t const              m = _all.size();
    std::vector<std::vector<bool>> below(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        below[i][j] = i != j && _all[i].is_subset_of(_all[j]);
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (!below[i][j]) {
          continue;
        }
        bool covers = true;
        for (std::size_t k = 0; k < m && covers; ++k) {
          covers = !(below[i][k] && below[k][j]);
        }
        if (covers) {
          edges.emplace_back(i, j);
        }
      }
    }
    return edges;
  }

  std::optional<Congruence> CongruenceLattice::meet_of(
      std::function<bool(Congruence const&)> const& pred) const {
    std::optional<Congruence> result;
    for (auto const& rho : _all) {
      if (pred(rho)) {
        result = result ? meet(*result, rho) : rho;
      }
    }
    return result;
  }

  std::optional<Congruence> CongruenceLattice::join_of(
      std::function<bool(Congruence const&)> const& pred) const {
    std::optional<Congruence> result;
    for (auto const& rho : _all) {
      if (pred(rho)) {
        result = result ? join(*result, rho) : rho;
      }
    }
    return result;
  }

  std::optional<Congruence> CongruenceLattice::least(
      std::function<bool(Congruence const&)> const& pred) const {
    std::vector<Congruence const*> members;
    for (auto const& rho : _all) {
      if (pred(rho)) {
        members.push_back(&rho);
      }
    }
    for (auto const* candidate : members) {
      if (std::all_of(members.begin(), members.end(),
                      [candidate](Congruence const* other) {
                        return candidate->is_subset_of(*other);
                      })) {
        return *candidate;
      }
    }
    return std::nullopt;
  }

  CongruenceLattice enumerate_congruence_lattice(InverseSemigroup const& S,
                                                 std::size_t             cap,
                                                 unsigned threads) {
    std::size_t const n = S.order();
    if (n > cap) {
      throw LatticeTooLarge(n, cap);
    }
    std::vector<ElementPair> pairs;
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = a + 1; b < n; ++b) {
        pairs.emplace_back(a, b);
      }
    }

    // Each slot is written by exactly one worker.
    std::vector<Partition> principal(pairs.size());
    auto work = [&](std::size_t first, std::size_t step) {
      for (std::size_t i = first; i < pairs.size(); i += step) {
        ElementPair const one[] = {pairs[i]};
        principal[i]            = congruence_closure(S, one).partition();
      }
    };
    threads = std::max(1u, threads);
    if (threads == 1) {
      work(0, 1);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(work, t, threads);
      }
    }

    std::set<Partition> generators(principal.begin(), principal.end());
    std::set<Partition> seen(generators);
    seen.insert(Partition::discrete(n));
    std::vector<Partition> queue(seen.begin(), seen.end());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto const& g : generators) {
        auto joined = queue[i].join(g);
        if (seen.insert(joined).second) {
          queue.push_back(std::move(joined));
        }
      }
    }

    std::vector<Congruence> all;
    all.reserve(seen.size());
    for (auto const& p : seen) {
      all.emplace_back(S, p);
    }
    return CongruenceLattice(S, std::move(all));
  }

}  // namespace congnet
