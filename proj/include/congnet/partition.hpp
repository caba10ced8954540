// Union-find and canonical partitions of [0, n).

#ifndef CONGNET_PARTITION_HPP_
#define CONGNET_PARTITION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "element_set.hpp"

namespace congnet {

  //! Union-find with path halving and union by rank.
  class DisjointSets {
   public:
    explicit DisjointSets(std::size_t n);

    element_type find(element_type a);
    //! Returns true if a and b were in different sets.
    bool        unite(element_type a, element_type b);
    std::size_t size() const noexcept { return _parent.size(); }

   private:
    std::vector<element_type> _parent;
    std::vector<std::uint32_t> _rank;
  };

  //! An equivalence relation on [0, n).
  //!
  //! Classes are numbered 0, 1, 2, ... in order of their least element, so
  //! two partitions are equal iff their label vectors are equal.
  class Partition {
   public:
    Partition() = default;

    static Partition discrete(std::size_t n);
    static Partition universal(std::size_t n);
    //! Any labelling; it is renumbered canonically.
    static Partition from_labels(std::span<std::uint32_t const> labels);
    static Partition from_disjoint_sets(DisjointSets& sets);

    std::size_t size() const noexcept { return _label.size(); }
    std::size_t number_of_classes() const noexcept { return _classes; }

    std::uint32_t class_of(element_type a) const { return _label[a]; }
    bool          related(element_type a, element_type b) const {
      return _label[a] == _label[b];
    }

    std::vector<std::uint32_t> const& labels() const noexcept {
      return _label;
    }
    std::vector<std::vector<element_type>> classes() const;
    //! Least element of every class, indexed by class.
    std::vector<element_type> representatives() const;

    //! this is contained in coarser, as sets of pairs.
    bool is_finer_than(Partition const& coarser) const;

    Partition meet(Partition const& other) const;
    Partition join(Partition const& other) const;

    //! The partition of positions 0..k-1 induced on the listed elements.
    Partition restricted_to(std::span<element_type const> elements) const;

    friend bool operator==(Partition const&, Partition const&) = default;
    friend auto operator<=>(Partition const& x, Partition const& y) {
      return x._label <=> y._label;
    }

   private:
    std::vector<std::uint32_t> _label;
    std::size_t                _classes = 0;
  };

}  // namespace congnet

#endif  // CONGNET_PARTITION_HPP_
