#include "congnet/partition.hpp"

#include <limits>
#include <map>
#include <numeric>
#include <utility>

namespace congnet {

  namespace {
    constexpr std::uint32_t UNSET = std::numeric_limits<std::uint32_t>::max();
  }

  DisjointSets::DisjointSets(std::size_t n) : _parent(n), _rank(n, 0) {
    std::iota(_parent.begin(), _parent.end(), element_type(0));
  }

  element_type DisjointSets::find(element_type a) {
    while (_parent[a] != a) {
      _parent[a] = _parent[_parent[a]];
      a          = _parent[a];
    }
    return a;
  }

  bool DisjointSets::unite(element_type a, element_type b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (_rank[a] < _rank[b]) {
      std::swap(a, b);
    }
    _parent[b] = a;
    if (_rank[a] == _rank[b]) {
      ++_rank[a];
    }
    return true;
  }

  Partition Partition::discrete(std::size_t n) {
    Partition p;
    p._label.resize(n);
    std::iota(p._label.begin(), p._label.end(), std::uint32_t(0));
    p._classes = n;
    return p;
  }

  Partition Partition::universal(std::size_t n) {
    Partition p;
    p._label.assign(n, 0);
    p._classes = n == 0 ? 0 : 1;
    return p;
  }

  Partition Partition::from_labels(std::span<std::uint32_t const> labels) {
    Partition                              p;
    std::map<std::uint32_t, std::uint32_t> renumber;
    p._label.reserve(labels.size());
    for (auto x : labels) {
      auto [it, inserted]
          = renumber.emplace(x, static_cast<std::uint32_t>(renumber.size()));
      p._label.push_back(it->second);
    }
    p._classes = renumber.size();
    return p;
  }

  Partition Partition::from_disjoint_sets(DisjointSets& sets) {
    Partition                  p;
    std::size_t const          n = sets.size();
    std::vector<std::uint32_t> root_label(n, UNSET);
    p._label.resize(n);
    for (element_type a = 0; a < n; ++a) {
      auto r = sets.find(a);
      if (root_label[r] == UNSET) {
        root_label[r] = static_cast<std::uint32_t>(p._classes++);
      }
      p._label[a] = root_label[r];
    }
    return p;
  }

  std::vector<std::vector<element_type>> Partition::classes() const {
    std::vector<std::vector<element_type>> result(_classes);
    for (element_type a = 0; a < _label.size(); ++a) {
      result[_label[a]].push_back(a);
    }
    return result;
  }

  std::vector<element_type> Partition::representatives() const {
    std::vector<element_type> result(_classes, 0);
    std::vector<bool>         seen(_classes, false);
    for (element_type a = 0; a < _label.size(); ++a) {
      if (!seen[_label[a]]) {
        seen[_label[a]]   = true;
        result[_label[a]] = a;
      }
    }
    return result;
  }

  bool Partition::is_finer_than(Partition const& coarser) const {
    std::vector<std::uint32_t> image(_classes, UNSET);
    for (element_type a = 0; a < _label.size(); ++a) {
      auto& slot = image[_label[a]];
      if (slot == UNSET) {
        slot = coarser._label[a];
      } else if (slot != coarser._label[a]) {
        return false;
      }
    }
    return true;
  }

  Partition Partition::meet(Partition const& other) const {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> index;
    std::vector<std::uint32_t> labels(_label.size());
    for (element_type a = 0; a < _label.size(); ++a) {
      auto [it, inserted] = index.emplace(
          std::make_pair(_label[a], other._label[a]),
          static_cast<std::uint32_t>(index.size()));
      labels[a] = it->second;
    }
    return from_labels(labels);
  }

  Partition Partition::join(Partition const& other) const {
    DisjointSets              sets(_label.size());
    std::vector<element_type> first_this(_classes, UNSET);
    std::vector<element_type> first_other(other._classes, UNSET);
    for (element_type a = 0; a < _label.size(); ++a) {
      for (auto* slot : {&first_this[_label[a]], &first_other[other._label[a]]}) {
        if (*slot == UNSET) {
          *slot = a;
        } else {
          sets.unite(*slot, a);
        }
      }
    }
    return from_disjoint_sets(sets);
  }

  Partition
  Partition::restricted_to(std::span<element_type const> elements) const {
    std::vector<std::uint32_t> labels;
    labels.reserve(elements.size());
    for (auto a : elements) {
      labels.push_back(_label[a]);
    }
    return from_labels(labels);
  }

}  // namespace congnet
