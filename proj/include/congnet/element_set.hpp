// Subsets of the dense element range [0, n) of a finite semigroup.

#ifndef CONGNET_ELEMENT_SET_HPP_
#define CONGNET_ELEMENT_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace congnet {

  //! Elements of a semigroup of order n are the integers 0, ..., n - 1.
  using element_type = std::uint32_t;

  //! A subset of [0, n) stored as a membership vector.
  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : _member(universe, false) {}
    ElementSet(std::size_t universe, std::initializer_list<element_type> xs);
    ElementSet(std::size_t universe, std::vector<element_type> const& xs);

    static ElementSet full(std::size_t universe);

    std::size_t universe() const noexcept { return _member.size(); }
    std::size_t size() const noexcept { return _count; }
    bool        empty() const noexcept { return _count == 0; }

    bool contains(element_type a) const { return _member[a]; }
    void insert(element_type a);
    void erase(element_type a);

    //! Members in increasing order.
    std::vector<element_type> elements() const;

    bool is_subset_of(ElementSet const& other) const;

    friend bool operator==(ElementSet const& x, ElementSet const& y) {
      return x._member == y._member;
    }

   private:
    std::vector<bool> _member;
    std::size_t       _count = 0;
  };

}  // namespace congnet

#endif  // CONGNET_ELEMENT_SET_HPP_
