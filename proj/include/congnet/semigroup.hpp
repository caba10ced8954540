// Finite inverse semigroups given by Cayley tables.

#ifndef CONGNET_SEMIGROUP_HPP_
#define CONGNET_SEMIGROUP_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "element_set.hpp"

namespace congnet {

  using Table = std::vector<std::vector<element_type>>;

  //! An immutable finite inverse semigroup.
  //!
  //! The only way to obtain one is through from_table (or a builder that
  //! calls it), which checks associativity, regularity, commuting
  //! idempotents and uniqueness of inverses. Every other function in the
  //! library assumes these hold.
  //!
  //! Copies share the underlying table.
  class InverseSemigroup {
   public:
    //! Validates table as an inverse semigroup; throws InvalidSemigroup.
    //! labels, when non-empty, must have one entry per element.
    static InverseSemigroup from_table(Table const&             table,
                                       std::vector<std::string> labels = {});

    std::size_t order() const noexcept { return _data->order; }

    element_type product(element_type a, element_type b) const {
      return _data->table[a * _data->order + b];
    }
    element_type product(element_type a, element_type b,
                         element_type c) const {
      return product(product(a, b), c);
    }
    element_type inverse(element_type a) const { return _data->inverse[a]; }

    bool is_idempotent(element_type a) const {
      return _data->idempotent.contains(a);
    }
    //! E_S in increasing order.
    std::vector<element_type> const& idempotents() const noexcept {
      return _data->idempotents;
    }
    ElementSet const& idempotent_set() const noexcept {
      return _data->idempotent;
    }

    std::optional<element_type> zero() const noexcept { return _data->zero; }

    Table table() const;

    std::string label(element_type a) const;
    bool        has_labels() const noexcept { return !_data->labels.empty(); }
    std::vector<std::string> const& labels() const noexcept {
      return _data->labels;
    }

    //! Same table (labels are ignored).
    friend bool operator==(InverseSemigroup const& x,
                           InverseSemigroup const& y) {
      return x._data == y._data || x._data->table == y._data->table;
    }

   private:
    struct Data {
      std::size_t                 order = 0;
      std::vector<element_type>   table;
      std::vector<element_type>   inverse;
      std::vector<element_type>   idempotents;
      ElementSet                  idempotent;
      std::optional<element_type> zero;
      std::vector<std::string>    labels;
    };

    explicit InverseSemigroup(std::shared_ptr<Data const> data)
        : _data(std::move(data)) {}

    std::shared_ptr<Data const> _data;
  };

  //! a <= b in the natural partial order: a = eb for some idempotent e.
  bool natural_leq(InverseSemigroup const& S, element_type a, element_type b);
  //! The same order tested through the right-hand form a = bf.
  bool natural_leq_right(InverseSemigroup const& S, element_type a,
                         element_type b);

  //! Elements commuting with every idempotent.
  ElementSet centralizer_of_idempotents(InverseSemigroup const& S);
  //! Elements above some idempotent in the natural order.
  ElementSet idempotent_closure(InverseSemigroup const& S);

  bool is_full(InverseSemigroup const& S, ElementSet const& K);
  //! Closed under products and inverses.
  bool is_inverse_subsemigroup(InverseSemigroup const& S, ElementSet const& K);

  //! An inverse subsemigroup re-indexed as a semigroup of its own.
  struct Subsemigroup {
    InverseSemigroup semigroup;
    //! embedding[i] is the element of the parent that i represents.
    std::vector<element_type> embedding;
  };

  //! K must be a nonempty inverse subsemigroup.
  Subsemigroup restrict_to(InverseSemigroup const& S, ElementSet const& K);

  //! Degree-d partial bijection stored as 0-based images.
  class PartialBijection {
   public:
    static constexpr element_type undefined = static_cast<element_type>(-1);

    PartialBijection() = default;
    //! Throws Error if images are out of range or not injective.
    explicit PartialBijection(std::vector<element_type> images);

    static PartialBijection identity(std::size_t degree);

    std::size_t  degree() const noexcept { return _image.size(); }
    element_type operator[](std::size_t x) const { return _image[x]; }
    std::size_t  rank() const;

    PartialBijection inverse() const;

    std::vector<element_type> const& images() const noexcept {
      return _image;
    }

    //! 1-based images, '-' for undefined, e.g. "[2,-]".
    std::string to_string() const;

    friend bool operator==(PartialBijection const&,
                           PartialBijection const&) = default;
    friend auto operator<=>(PartialBijection const&,
                            PartialBijection const&) = default;

   private:
    std::vector<element_type> _image;
  };

  //! Composition applying the right factor first: (f * g)(x) = f(g(x)).
  PartialBijection operator*(PartialBijection const& f,
                             PartialBijection const& g);

  struct GeneratedSemigroup {
    InverseSemigroup semigroup;
    //! The partial bijection behind each element index.
    std::vector<PartialBijection> elements;
  };

  constexpr std::size_t DEFAULT_CLOSURE_CAP = 20'000;

  //! Inverse subsemigroup of the symmetric inverse monoid generated by
  //! gens. Elements are numbered in breadth-first order from the
  //! generators.
  GeneratedSemigroup
  from_partial_bijection_generators(std::size_t                          degree,
                                    std::vector<PartialBijection> const& gens,
                                    std::size_t cap = DEFAULT_CLOSURE_CAP);

  //! Cayley table of a finite list of partial bijections closed under
  //! composition and inversion.
  GeneratedSemigroup
  from_partial_bijections(std::vector<PartialBijection> elements);

}  // namespace congnet

#endif  // CONGNET_SEMIGROUP_HPP_
