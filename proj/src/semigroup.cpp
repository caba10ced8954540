#include "congnet/semigroup.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "congnet/errors.hpp"

namespace congnet {

  namespace {
    std::string show(std::vector<std::size_t> const& xs) {
      std::ostringstream out;
      out << '(';
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out << (i == 0 ? "" : ", ") << xs[i];
      }
      out << ')';
      return out.str();
    }

    [[noreturn]] void fail(InvalidSemigroup::Reason   reason,
                           std::vector<std::size_t>   witness,
                           std::string const&         what) {
      auto message = what + " " + show(witness);
      throw InvalidSemigroup(reason, std::move(witness), message);
    }
  }  // namespace

  InvalidSemigroup::InvalidSemigroup(Reason                   reason,
                                     std::vector<std::size_t> witness,
                                     std::string const&       what)
      : Error(what), _reason(reason), _witness(std::move(witness)) {}

  ParseError::ParseError(std::size_t line, std::string const& reason)
      : Error("line " + std::to_string(line) + ": " + reason), _line(line) {}

  ////////////////////////////////////////////////////////////////////////
  // InverseSemigroup
  ////////////////////////////////////////////////////////////////////////

  InverseSemigroup InverseSemigroup::from_table(Table const&             table,
                                                std::vector<std::string> labels) {
    using Reason      = InvalidSemigroup::Reason;
    std::size_t const n = table.size();
    if (n == 0) {
      fail(Reason::bad_table, {}, "empty table");
    }
    if (!labels.empty() && labels.size() != n) {
      fail(Reason::bad_table, {labels.size()}, "wrong number of labels");
    }
    auto data   = std::make_shared<Data>();
    data->order = n;
    data->table.reserve(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) {
        fail(Reason::bad_table, {a}, "row has the wrong length");
      }
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] >= n) {
          fail(Reason::bad_table, {a, b}, "entry out of range at");
        }
        data->table.push_back(table[a][b]);
      }
    }
    auto const& t    = data->table;
    auto        mult = [&t, n](std::size_t a, std::size_t b) {
      return static_cast<std::size_t>(t[a * n + b]);
    };

    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t const ab = mult(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (mult(ab, c) != mult(a, mult(b, c))) {
            fail(Reason::not_associative, {a, b, c}, "(ab)c != a(bc) for");
          }
        }
      }
    }

    data->idempotent = ElementSet(n);
    for (element_type a = 0; a < n; ++a) {
      if (mult(a, a) == a) {
        data->idempotents.push_back(a);
        data->idempotent.insert(a);
      }
    }
    for (auto e : data->idempotents) {
      for (auto f : data->idempotents) {
        if (e < f && mult(e, f) != mult(f, e)) {
          fail(Reason::idempotents_dont_commute, {e, f},
               "idempotents do not commute:");
        }
      }
    }

    data->inverse.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::size_t found = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (mult(mult(a, x), a) == a && mult(mult(x, a), x) == x) {
          if (found++ == 0) {
            data->inverse[a] = static_cast<element_type>(x);
          }
        }
      }
      if (found == 0) {
        fail(Reason::not_regular, {a}, "element has no inverse:");
      } else if (found > 1) {
        fail(Reason::no_unique_inverse, {a},
             "element has more than one inverse:");
      }
    }

    for (std::size_t z = 0; z < n && !data->zero; ++z) {
      bool is_zero = true;
      for (std::size_t a = 0; a < n && is_zero; ++a) {
        is_zero = mult(z, a) == z && mult(a, z) == z;
      }
      if (is_zero) {
        data->zero = static_cast<element_type>(z);
      }
    }
    data->labels = std::move(labels);
    return InverseSemigroup(std::move(data));
  }

  Table InverseSemigroup::table() const {
    std::size_t const n = order();
    Table             result(n, std::vector<element_type>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        result[a][b] = _data->table[a * n + b];
      }
    }
    return result;
  }

  std::string InverseSemigroup::label(element_type a) const {
    return _data->labels.empty() ? std::to_string(a) : _data->labels[a];
  }

  ////////////////////////////////////////////////////////////////////////
  // Order, centralizer, closure
  ////////////////////////////////////////////////////////////////////////

  bool natural_leq(InverseSemigroup const& S, element_type a, element_type b) {
    for (auto e : S.idempotents()) {
      if (S.product(e, b) == a) {
        return true;
      }
    }
    return false;
  }

  bool natural_leq_right(InverseSemigroup const& S, element_type a,
                         element_type b) {
    for (auto f : S.idempotents()) {
      if (S.product(b, f) == a) {
        return true;
      }
    }
    return false;
  }

  ElementSet centralizer_of_idempotents(InverseSemigroup const& S) {
    ElementSet result(S.order());
    for (element_type a = 0; a < S.order(); ++a) {
      bool central = true;
      for (auto e : S.idempotents()) {
        if (S.product(a, e) != S.product(e, a)) {
          central = false;
          break;
        }
      }
      if (central) {
        result.insert(a);
      }
    }
    return result;
  }

  ElementSet idempotent_closure(InverseSemigroup const& S) {
    ElementSet result(S.order());
    for (element_type a = 0; a < S.order(); ++a) {
      for (auto e : S.idempotents()) {
        if (natural_leq(S, e, a)) {
          result.insert(a);
          break;
        }
      }
    }
    return result;
  }

  bool is_full(InverseSemigroup const& S, ElementSet const& K) {
    return S.idempotent_set().is_subset_of(K);
  }

  bool is_inverse_subsemigroup(InverseSemigroup const& S,
                               ElementSet const&       K) {
    auto const members = K.elements();
    for (auto a : members) {
      if (!K.contains(S.inverse(a))) {
        return false;
      }
      for (auto b : members) {
        if (!K.contains(S.product(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  Subsemigroup restrict_to(InverseSemigroup const& S, ElementSet const& K) {
    auto const                members = K.elements();
    std::vector<element_type> position(S.order(), 0);
    for (element_type i = 0; i < members.size(); ++i) {
      position[members[i]] = i;
    }
    Table                    table(members.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto b : members) {
        auto ab = S.product(members[i], b);
        if (!K.contains(ab)) {
          throw Error("restrict_to: subset is not closed under products");
        }
        table[i].push_back(position[ab]);
      }
      if (S.has_labels()) {
        labels.push_back(S.label(members[i]));
      }
    }
    return {InverseSemigroup::from_table(table, std::move(labels)), members};
  }

  ////////////////////////////////////////////////////////////////////////
  // Partial bijections
  ////////////////////////////////////////////////////////////////////////

  PartialBijection::PartialBijection(std::vector<element_type> images)
      : _image(std::move(images)) {
    std::vector<bool> hit(_image.size(), false);
    for (auto y : _image) {
      if (y == undefined) {
        continue;
      }
      if (y >= _image.size()) {
        throw Error("partial bijection image out of range: "
                    + std::to_string(y + 1));
      }
      if (hit[y]) {
        throw Error("partial bijection is not injective at image "
                    + std::to_string(y + 1));
      }
      hit[y] = true;
    }
  }

  PartialBijection PartialBijection::identity(std::size_t degree) {
    std::vector<element_type> images(degree);
    for (element_type x = 0; x < degree; ++x) {
      images[x] = x;
    }
    return PartialBijection(std::move(images));
  }

  std::size_t PartialBijection::rank() const {
    std::size_t r = 0;
    for (auto y : _image) {
      r += (y != undefined);
    }
    return r;
  }

  PartialBijection PartialBijection::inverse() const {
    std::vector<element_type> images(_image.size(), undefined);
    for (element_type x = 0; x < _image.size(); ++x) {
      if (_image[x] != undefined) {
        images[_image[x]] = x;
      }
    }
    return PartialBijection(std::move(images));
  }

  std::string PartialBijection::to_string() const {
    std::string result = "[";
    for (std::size_t x = 0; x < _image.size(); ++x) {
      if (x != 0) {
        result += ',';
      }
      result += _image[x] == undefined ? std::string("-")
                                       : std::to_string(_image[x] + 1);
    }
    return result + "]";
  }

  PartialBijection operator*(PartialBijection const& f,
                             PartialBijection const& g) {
    std::vector<element_type> images(g.degree(), PartialBijection::undefined);
    for (std::size_t x = 0; x < g.degree(); ++x) {
      if (g[x] != PartialBijection::undefined) {
        images[x] = f[g[x]];
      }
    }
    return PartialBijection(std::move(images));
  }

  GeneratedSemigroup
  from_partial_bijection_generators(std::size_t                          degree,
                                    std::vector<PartialBijection> const& gens,
                                    std::size_t                          cap) {
    if (gens.empty()) {
      throw EmptyGeneratorSet();
    }
    std::vector<PartialBijection>             elements;
    std::map<PartialBijection, element_type> index;
    auto add = [&](PartialBijection const& x) {
      if (index.emplace(x, static_cast<element_type>(elements.size())).second) {
        if (elements.size() == cap) {
          throw ClosureExceedsLimit(cap);
        }
        elements.push_back(x);
      }
    };
    for (auto const& g : gens) {
      if (g.degree() != degree) {
        throw Error("generator " + g.to_string() + " does not have degree "
                    + std::to_string(degree));
      }
      add(g);
      add(g.inverse());
    }
    std::vector<PartialBijection> const letters = elements;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& g : letters) {
        add(elements[i] * g);
      }
    }
    return from_partial_bijections(std::move(elements));
  }

  GeneratedSemigroup
  from_partial_bijections(std::vector<PartialBijection> elements) {
    std::map<PartialBijection, element_type> index;
    for (element_type i = 0; i < elements.size(); ++i) {
      index.emplace(elements[i], i);
    }
    Table                    table(elements.size());
    std::vector<std::string> labels;
    for (auto const& f : elements) {
      for (auto const& g : elements) {
        auto it = index.find(f * g);
        if (it == index.end()) {
          throw Error("partial bijections are not closed under composition");
        }
        table[labels.size()].push_back(it->second);
      }
      labels.push_back(f.to_string());
    }
    return {InverseSemigroup::from_table(table, std::move(labels)),
            std::move(elements)};
  }

}  // namespace congnet
