#include "congnet/element_set.hpp"

namespace congnet {

  ElementSet::ElementSet(std::size_t                       universe,
                         std::initializer_list<element_type> xs)
      : _member(universe, false) {
    for (auto x : xs) {
      insert(x);
    }
  }

  ElementSet::ElementSet(std::size_t                      universe,
                         std::vector<element_type> const& xs)
      : _member(universe, false) {
    for (auto x : xs) {
      insert(x);
    }
  }

  ElementSet ElementSet::full(std::size_t universe) {
    ElementSet result;
    result._member.assign(universe, true);
    result._count = universe;
    return result;
  }

  void ElementSet::insert(element_type a) {
    if (!_member[a]) {
      _member[a] = true;
      ++_count;
    }
  }

  void ElementSet::erase(element_type a) {
    if (_member[a]) {
      _member[a] = false;
      --_count;
    }
  }

  std::vector<element_type> ElementSet::elements() const {
    std::vector<element_type> result;
    result.reserve(_count);
    for (element_type a = 0; a < _member.size(); ++a) {
      if (_member[a]) {
        result.push_back(a);
      }
    }
    return result;
  }

  bool ElementSet::is_subset_of(ElementSet const& other) const {
    for (element_type a = 0; a < _member.size(); ++a) {
      if (_member[a] && !other._member[a]) {
        return false;
      }
    }
    return true;
  }

}  // namespace congnet
