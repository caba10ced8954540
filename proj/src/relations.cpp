#include "congnet/relations.hpp"

#include <deque>

namespace congnet {

  PairSet PairSet::of(Partition const& p) {
    PairSet result(p.size());
    for (auto const& cls : p.classes()) {
      for (auto a : cls) {
        for (auto b : cls) {
          result.insert(a, b);
        }
      }
    }
    return result;
  }

  std::size_t PairSet::size() const {
    std::size_t count = 0;
    for (bool bit : _bits) {
      count += bit;
    }
    return count;
  }

  std::vector<ElementPair> PairSet::pairs() const {
    std::vector<ElementPair> result;
    for (element_type a = 0; a < _n; ++a) {
      for (element_type b = 0; b < _n; ++b) {
        if (contains(a, b)) {
          result.emplace_back(a, b);
        }
      }
    }
    return result;
  }

  PairSet PairSet::intersect(PairSet const& other) const {
    PairSet result(_n);
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      result._bits[i] = _bits[i] && other._bits[i];
    }
    return result;
  }

  bool PairSet::is_subset_of(PairSet const& other) const {
    for (std::size_t i = 0; i < _bits.size(); ++i) {
      if (_bits[i] && !other._bits[i]) {
        return false;
      }
    }
    return true;
  }

  bool PairSet::is_diagonal() const {
    for (element_type a = 0; a < _n; ++a) {
      for (element_type b = 0; b < _n; ++b) {
        if (a != b && contains(a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  bool PairSet::is_equivalence() const {
    for (element_type a = 0; a < _n; ++a) {
      if (!contains(a, a)) {
        return false;
      }
      for (element_type b = 0; b < _n; ++b) {
        if (!contains(a, b)) {
          continue;
        }
        if (!contains(b, a)) {
          return false;
        }
        for (element_type c = 0; c < _n; ++c) {
          if (contains(b, c) && !contains(a, c)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    template <typename Key>
    Partition partition_by(InverseSemigroup const& S, Key key) {
      std::vector<std::uint32_t> labels(S.order());
      for (element_type a = 0; a < S.order(); ++a) {
        labels[a] = key(a);
      }
      return Partition::from_labels(labels);
    }
  }  // namespace

  Partition green_L(InverseSemigroup const& S) {
    return partition_by(
        S, [&S](element_type a) { return S.product(S.inverse(a), a); });
  }

  Partition green_R(InverseSemigroup const& S) {
    return partition_by(
        S, [&S](element_type a) { return S.product(a, S.inverse(a)); });
  }

  Partition green_H(InverseSemigroup const& S) {
    return green_L(S).meet(green_R(S));
  }

  PairSet relation_F(InverseSemigroup const& S) {
    PairSet result(S.order());
    for (element_type a = 0; a < S.order(); ++a) {
      for (element_type b = 0; b < S.order(); ++b) {
        if (S.is_idempotent(S.product(S.inverse(a), b))) {
          result.insert(a, b);
        }
      }
    }
    return result;
  }

  PairSet relation_C(InverseSemigroup const& S) {
    PairSet result(S.order());
    for (element_type a = 0; a < S.order(); ++a) {
      for (element_type b = 0; b < S.order(); ++b) {
        if (S.is_idempotent(S.product(S.inverse(a), b))
            && S.is_idempotent(S.product(a, S.inverse(b)))) {
          result.insert(a, b);
        }
      }
    }
    return result;
  }

  PairSet intersect(Congruence const& rho, PairSet const& xi) {
    PairSet result(xi.universe());
    for (auto const& cls : rho.partition().classes()) {
      for (auto a : cls) {
        for (auto b : cls) {
          if (xi.contains(a, b)) {
            result.insert(a, b);
          }
        }
      }
    }
    return result;
  }

  Congruence congruence_closure(InverseSemigroup const&      S,
                                std::span<ElementPair const> pairs) {
    std::size_t const       n = S.order();
    DisjointSets            sets(n);
    std::deque<ElementPair> queue;
    for (auto [a, b] : pairs) {
      if (sets.unite(a, b)) {
        queue.emplace_back(a, b);
      }
    }
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      for (element_type x = 0; x < n; ++x) {
        element_type const xa = S.product(x, a), xb = S.product(x, b);
        if (sets.unite(xa, xb)) {
          queue.emplace_back(xa, xb);
        }
        element_type const ax = S.product(a, x), bx = S.product(b, x);
        if (sets.unite(ax, bx)) {
          queue.emplace_back(ax, bx);
        }
      }
    }
    return Congruence(S, Partition::from_disjoint_sets(sets));
  }

  Congruence congruence_closure(InverseSemigroup const& S,
                                PairSet const&          pairs) {
    auto const list = pairs.pairs();
    return congruence_closure(S, std::span<ElementPair const>(list));
  }

  bool is_congruence(InverseSemigroup const& S, PairSet const& rel) {
    if (rel.universe() != S.order() || !rel.is_equivalence()) {
      return false;
    }
    for (auto [a, b] : rel.pairs()) {
      for (element_type x = 0; x < S.order(); ++x) {
        if (!rel.contains(S.product(x, a), S.product(x, b))
            || !rel.contains(S.product(a, x), S.product(b, x))) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace congnet
