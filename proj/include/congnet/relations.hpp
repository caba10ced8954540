// Green's relations, the F and C relations, and congruence closure.

#ifndef CONGNET_RELATIONS_HPP_
#define CONGNET_RELATIONS_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "partition.hpp"
#include "semigroup.hpp"

namespace congnet {

  using ElementPair = std::pair<element_type, element_type>;

  //! An arbitrary binary relation on [0, n), as an n x n bit matrix.
  class PairSet {
   public:
    PairSet() = default;
    explicit PairSet(std::size_t n) : _n(n), _bits(n * n, false) {}

    //! All pairs of an equivalence.
    static PairSet of(Partition const& p);

    std::size_t universe() const noexcept { return _n; }
    bool        contains(element_type a, element_type b) const {
      return _bits[a * _n + b];
    }
    void insert(element_type a, element_type b) { _bits[a * _n + b] = true; }

    std::size_t              size() const;
    std::vector<ElementPair> pairs() const;

    PairSet intersect(PairSet const& other) const;
    bool    is_subset_of(PairSet const& other) const;
    //! Only pairs (a, a).
    bool is_diagonal() const;
    bool is_equivalence() const;

    friend bool operator==(PairSet const&, PairSet const&) = default;

   private:
    std::size_t       _n = 0;
    std::vector<bool> _bits;
  };

  //! a L b iff a^-1 a = b^-1 b.
  Partition green_L(InverseSemigroup const& S);
  //! a R b iff a a^-1 = b b^-1.
  Partition green_R(InverseSemigroup const& S);
  Partition green_H(InverseSemigroup const& S);

  //! a F b iff a^-1 b is idempotent.
  PairSet relation_F(InverseSemigroup const& S);
  //! a C b iff a^-1 b and a b^-1 are both idempotent.
  PairSet relation_C(InverseSemigroup const& S);

  //! Pairs of rho that also lie in xi.
  PairSet intersect(Congruence const& rho, PairSet const& xi);

  //! The least congruence containing the given pairs.
  //!
  //! Every union performed on the underlying disjoint sets is queued once;
  //! processing a queued pair (a, b) unites xa with xb and ax with bx for
  //! all x. The queued pairs generate the equivalence, so once the queue is
  //! empty the equivalence is compatible.
  Congruence congruence_closure(InverseSemigroup const&     S,
                                std::span<ElementPair const> pairs);
  Congruence congruence_closure(InverseSemigroup const& S,
                                PairSet const&          pairs);

  //! rel is an equivalence and compatible with multiplication.
  bool is_congruence(InverseSemigroup const& S, PairSet const& rel);

}  // namespace congnet

#endif  // CONGNET_RELATIONS_HPP_
