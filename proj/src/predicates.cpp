#include "congnet/predicates.hpp"

#include "congnet/errors.hpp"
#include "congnet/kernel_trace.hpp"

namespace congnet {

  namespace {
    ElementSet idempotents_in(InverseSemigroup const& S, ElementSet const& K) {
      ElementSet result(S.order());
      for (auto e : S.idempotents()) {
        if (K.contains(e)) {
          result.insert(e);
        }
      }
      return result;
    }
  }  // namespace

  bool is_clifford(InverseSemigroup const& S) {
    return is_clifford(S, ElementSet::full(S.order()));
  }

  bool is_clifford(InverseSemigroup const& S, ElementSet const& K) {
    auto const members = K.elements();
    for (auto e : idempotents_in(S, K).elements()) {
      for (auto a : members) {
        if (S.product(e, a) != S.product(a, e)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_e_unitary(InverseSemigroup const& S) {
    return is_e_unitary(S, ElementSet::full(S.order()));
  }

  bool is_e_unitary(InverseSemigroup const& S, ElementSet const& K) {
    auto const members = K.elements();
    bool       by_idempotent = true;
    for (auto e : idempotents_in(S, K).elements()) {
      for (auto y : members) {
        if (S.product(e, y) == e && !S.is_idempotent(y)) {
          by_idempotent = false;
        }
      }
    }
    bool by_element = true;
    for (auto x : members) {
      for (auto y : members) {
        if (S.product(x, y) == x && S.product(y, y) != y) {
          by_element = false;
        }
      }
    }
    if (by_idempotent != by_element) {
      throw InternalError("is_e_unitary: the two characterizations differ");
    }
    return by_idempotent;
  }

  bool is_e_reflexive(InverseSemigroup const& S) {
    return is_e_reflexive(S, ElementSet::full(S.order()));
  }

  bool is_e_reflexive(InverseSemigroup const& S, ElementSet const& K) {
    auto const members = K.elements();
    for (auto e : idempotents_in(S, K).elements()) {
      for (auto x : members) {
        auto const ex = S.product(e, x);
        for (auto y : members) {
          if (S.is_idempotent(S.product(ex, y))
              && !S.is_idempotent(S.product(e, y, x))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_fundamental(InverseSemigroup const& S) {
    return special_mu(S).is_trivial();
  }

  bool is_e_disjunctive(InverseSemigroup const& S) {
    return special_tau(S).is_trivial();
  }

  bool is_over_e_unitary(Congruence const& rho) {
    auto const& S = rho.semigroup();
    auto const  classes = rho.partition().classes();
    std::vector<bool> done(classes.size(), false);
    for (auto e : S.idempotents()) {
      auto const c = rho.partition().class_of(e);
      if (done[c]) {
        continue;
      }
      done[c] = true;
      if (!is_e_unitary(S, ElementSet(S.order(), classes[c]))) {
        return false;
      }
    }
    return true;
  }

  bool is_ker_alpha_n_clifford(MinNetwork const& net, std::size_t n) {
    return is_clifford(net.semigroup(), net.alpha(n).kernel());
  }

  bool is_ker_alpha_n_e_reflexive(MinNetwork const& net, std::size_t n) {
    return is_e_reflexive(net.semigroup(), net.alpha(n).kernel());
  }

  bool is_beta_n_over_e_unitary(MinNetwork const& net, std::size_t n) {
    return is_over_e_unitary(net.beta(n));
  }

  std::string to_string(Family family) {
    switch (family) {
      case Family::A:
        return "A";
      case Family::B:
        return "B";
      case Family::A_prime:
        return "Aprime";
      case Family::B_prime:
        return "Bprime";
    }
    return "?";
  }

  Family family_from_string(std::string const& name) {
    if (name == "A") {
      return Family::A;
    } else if (name == "B") {
      return Family::B;
    } else if (name == "Aprime" || name == "A'") {
      return Family::A_prime;
    } else if (name == "Bprime" || name == "B'") {
      return Family::B_prime;
    }
    throw Error("unknown implication family: " + name);
  }

  bool satisfies_implication(MinNetwork const& net, ImplicationSpec spec) {
    auto const&       S    = net.semigroup();
    std::size_t const size = S.order();
    bool const is_a = spec.family == Family::A || spec.family == Family::A_prime;

    if (spec.n == 0) {
      return size == 1;
    }
    if (is_a && spec.n == 1) {
      return S.idempotents().size() == 1;
    }
    ElementSet const centralizer = centralizer_of_idempotents(S);
    if (is_a && spec.n == 2) {
      return centralizer.size() == size;
    }
    if (!is_a && spec.n == 1) {
      return S.idempotents().size() == size;
    }

    auto conclusion = [&](element_type y) {
      return is_a ? centralizer.contains(y) : S.is_idempotent(y);
    };
    // premise(x, y) beyond xy = x
    auto premise = [&](element_type x, element_type y) {
      switch (spec.family) {
        case Family::A:
          return net.beta(spec.n - 3).related(x, y);
        case Family::B:
          return net.beta(spec.n - 2).related(x, y);
        case Family::A_prime:
          return net.alpha(spec.n - 2)
              .related(S.product(S.inverse(x), x),
                       S.product(y, S.inverse(y)));
        case Family::B_prime:
          return net.alpha(spec.n - 1)
              .related(S.product(S.inverse(x), x),
                       S.product(y, S.inverse(y)));
      }
      return false;
    };
    for (element_type x = 0; x < size; ++x) {
      for (element_type y = 0; y < size; ++y) {
        if (S.product(x, y) == x && premise(x, y) && !conclusion(y)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace congnet
