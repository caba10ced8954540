// Exception types thrown by congnet.

#ifndef CONGNET_ERRORS_HPP_
#define CONGNET_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace congnet {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A table that does not describe an inverse semigroup.
  class InvalidSemigroup : public Error {
   public:
    enum class Reason {
      bad_table,
      not_associative,
      not_regular,
      idempotents_dont_commute,
      no_unique_inverse,
      not_a_group,
      not_a_semilattice,
      maps_not_functorial
    };

    InvalidSemigroup(Reason reason, std::vector<std::size_t> witness,
                     std::string const& what);

    Reason reason() const noexcept { return _reason; }
    //! Elements exhibiting the failure, e.g. (a, b, c) for associativity.
    std::vector<std::size_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    Reason                   _reason;
    std::vector<std::size_t> _witness;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& reason);
    std::size_t line() const noexcept { return _line; }

   private:
    std::size_t _line;
  };

  class EmptyGeneratorSet : public Error {
   public:
    EmptyGeneratorSet() : Error("generator set is empty") {}
  };

  class ClosureExceedsLimit : public Error {
   public:
    explicit ClosureExceedsLimit(std::size_t cap)
        : Error("closure exceeds the limit of " + std::to_string(cap)
                + " elements"),
          _cap(cap) {}
    std::size_t cap() const noexcept { return _cap; }

   private:
    std::size_t _cap;
  };

  class DegreeTooLarge : public Error {
   public:
    using Error::Error;
  };

  class LatticeTooLarge : public Error {
   public:
    LatticeTooLarge(std::size_t order, std::size_t cap)
        : Error("congruence lattice enumeration needs order <= "
                + std::to_string(cap) + ", got " + std::to_string(order)) {}
  };

  class NotStabilized : public Error {
   public:
    explicit NotStabilized(std::size_t max_level)
        : Error("min network did not stabilize within "
                + std::to_string(max_level) + " levels"),
          _max_level(max_level) {}
    std::size_t max_level() const noexcept { return _max_level; }

   private:
    std::size_t _max_level;
  };

  //! Thrown by reconstruct when a trace and kernel do not form a congruence
  //! pair.
  class IncompatiblePair : public Error {
   public:
    using Error::Error;
  };

  //! An equivalence that was required to be a congruence is not one.
  class NotACongruence : public Error {
   public:
    using Error::Error;
  };

  //! Internal consistency check failed. Indicates a bug, never bad input.
  class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace congnet

#endif  // CONGNET_ERRORS_HPP_
