#include "congnet/catalog.hpp"

#include <algorithm>
#include <optional>

#include "congnet/errors.hpp"

namespace congnet {

  namespace {
    using Reason = InvalidSemigroup::Reason;

    // Every partial injection of {0, ..., n - 1}.
    void all_partial_injections(std::size_t                    n,
                                std::vector<element_type>&     image,
                                std::vector<bool>&             used,
                                std::vector<PartialBijection>& out) {
      if (image.size() == n) {
        out.emplace_back(image);
        return;
      }
      image.push_back(PartialBijection::undefined);
      all_partial_injections(n, image, used, out);
      for (element_type y = 0; y < n; ++y) {
        if (!used[y]) {
          used[y]       = true;
          image.back()  = y;
          all_partial_injections(n, image, used, out);
          used[y] = false;
        }
      }
      image.pop_back();
    }
  }  // namespace

  InverseSemigroup build_symmetric_inverse_monoid(std::size_t n) {
    if (n == 0 || n > MAX_SYMMETRIC_DEGREE) {
      throw DegreeTooLarge("symmetric inverse monoid degree must be in [1, "
                           + std::to_string(MAX_SYMMETRIC_DEGREE) + "], got "
                           + std::to_string(n));
    }
    std::vector<PartialBijection> elements;
    std::vector<element_type>     image;
    std::vector<bool>             used(n, false);
    all_partial_injections(n, image, used, elements);
    std::sort(elements.begin(), elements.end());
    return from_partial_bijections(std::move(elements)).semigroup;
  }

  InverseSemigroup build_group(Table const& table) {
    auto G = InverseSemigroup::from_table(table);
    if (G.idempotents().size() != 1) {
      throw InvalidSemigroup(
          Reason::not_a_group,
          {G.idempotents()[0], G.idempotents()[1]},
          "not a group: more than one idempotent");
    }
    return G;
  }

  InverseSemigroup build_semilattice(Table const& meet) {
    auto Y = InverseSemigroup::from_table(meet);
    for (element_type a = 0; a < Y.order(); ++a) {
      if (!Y.is_idempotent(a)) {
        throw InvalidSemigroup(Reason::not_a_semilattice, {a},
                               "not a semilattice: " + std::to_string(a)
                                   + " is not idempotent");
      }
    }
    return Y;
  }

  InverseSemigroup build_brandt(Table const& group, std::size_t n) {
    if (n < 2) {
      throw Error("Brandt semigroup needs n >= 2, got " + std::to_string(n));
    }
    auto const        G    = build_group(group);
    std::size_t const k    = G.order();
    std::size_t const size = n * n * k + 1;
    auto index = [&](std::size_t i, std::size_t g, std::size_t j) {
      return static_cast<element_type>(1 + (i * n + j) * k + g);
    };
    Table                    table(size, std::vector<element_type>(size, 0));
    std::vector<std::string> labels(size, "0");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (element_type g = 0; g < k; ++g) {
          labels[index(i, g, j)] = "(" + std::to_string(i + 1) + ","
                                   + std::to_string(g) + ","
                                   + std::to_string(j + 1) + ")";
          for (std::size_t l = 0; l < n; ++l) {
            for (element_type h = 0; h < k; ++h) {
              table[index(i, g, j)][index(j, h, l)]
                  = index(i, G.product(g, h), l);
            }
          }
        }
      }
    }
    return InverseSemigroup::from_table(table, std::move(labels));
  }

  InverseSemigroup build_clifford(Table const&                   semilattice,
                                  std::vector<Table> const&      groups,
                                  std::vector<LinkingMap> const& maps) {
    auto const Y = build_semilattice(semilattice);
    if (groups.size() != Y.order()) {
      throw Error("expected " + std::to_string(Y.order())
                  + " groups, got " + std::to_string(groups.size()));
    }
    std::vector<InverseSemigroup> G;
    std::vector<std::size_t>      offset;
    std::size_t                   size = 0;
    for (auto const& t : groups) {
      G.push_back(build_group(t));
      offset.push_back(size);
      size += G.back().order();
    }

    auto geq = [&Y](element_type e, element_type f) {
      return Y.product(e, f) == f;
    };
    auto not_functorial = [](element_type e, element_type f,
                             std::string const& why) {
      return InvalidSemigroup(Reason::maps_not_functorial, {e, f},
                              "linking map " + std::to_string(e) + " -> "
                                  + std::to_string(f) + " " + why);
    };

    // phi[e][f] for e >= f
    std::vector<std::vector<std::optional<std::vector<element_type>>>> phi(
        Y.order(),
        std::vector<std::optional<std::vector<element_type>>>(Y.order()));
    for (element_type e = 0; e < Y.order(); ++e) {
      std::vector<element_type> id(G[e].order());
      for (element_type g = 0; g < id.size(); ++g) {
        id[g] = g;
      }
      phi[e][e] = id;
    }
    for (auto const& m : maps) {
      if (m.from >= Y.order() || m.to >= Y.order() || !geq(m.from, m.to)) {
        throw not_functorial(m.from, m.to, "is not between e >= f");
      }
      if (m.images.size() != G[m.from].order()
          || std::any_of(m.images.begin(), m.images.end(),
                         [&](element_type x) { return x >= G[m.to].order(); })) {
        throw not_functorial(m.from, m.to, "has the wrong shape");
      }
      if (m.from == m.to && m.images != *phi[m.from][m.to]) {
        throw not_functorial(m.from, m.to, "is not the identity");
      }
      phi[m.from][m.to] = m.images;
    }
    for (element_type e = 0; e < Y.order(); ++e) {
      for (element_type f = 0; f < Y.order(); ++f) {
        if (!geq(e, f)) {
          continue;
        }
        if (!phi[e][f]) {
          throw not_functorial(e, f, "is missing");
        }
        auto const& p = *phi[e][f];
        for (element_type a = 0; a < G[e].order(); ++a) {
          for (element_type b = 0; b < G[e].order(); ++b) {
            if (p[G[e].product(a, b)] != G[f].product(p[a], p[b])) {
              throw not_functorial(e, f, "is not a homomorphism");
            }
          }
        }
        for (element_type g = 0; g < Y.order(); ++g) {
          if (geq(f, g)) {
            auto const& q = *phi[f][g];
            auto const& r = *phi[e][g];
            for (element_type a = 0; a < G[e].order(); ++a) {
              if (q[p[a]] != r[a]) {
                throw not_functorial(e, g, "is not the composite through "
                                               + std::to_string(f));
              }
            }
          }
        }
      }
    }

    Table                    table(size, std::vector<element_type>(size));
    std::vector<std::string> labels;
    for (element_type e = 0; e < Y.order(); ++e) {
      for (element_type a = 0; a < G[e].order(); ++a) {
        labels.push_back("(" + std::to_string(e) + "," + std::to_string(a)
                         + ")");
        for (element_type f = 0; f < Y.order(); ++f) {
          element_type const ef = Y.product(e, f);
          for (element_type b = 0; b < G[f].order(); ++b) {
            table[offset[e] + a][offset[f] + b]
                = offset[ef]
                  + G[ef].product((*phi[e][ef])[a], (*phi[f][ef])[b]);
          }
        }
      }
    }
    return InverseSemigroup::from_table(table, std::move(labels));
  }

  InverseSemigroup direct_product(InverseSemigroup const& S,
                                  InverseSemigroup const& T) {
    std::size_t const m = S.order(), n = T.order();
    Table             table(m * n, std::vector<element_type>(m * n));
    for (element_type s = 0; s < m; ++s) {
      for (element_type t = 0; t < n; ++t) {
        for (element_type u = 0; u < m; ++u) {
          for (element_type v = 0; v < n; ++v) {
            table[s * n + t][u * n + v]
                = S.product(s, u) * n + T.product(t, v);
          }
        }
      }
    }
    std::vector<std::string> labels;
    if (S.has_labels() || T.has_labels()) {
      for (element_type s = 0; s < m; ++s) {
        for (element_type t = 0; t < n; ++t) {
          labels.push_back(S.label(s) + "x" + T.label(t));
        }
      }
    }
    return InverseSemigroup::from_table(table, std::move(labels));
  }

  Table cyclic_group_table(std::size_t n) {
    Table table(n, std::vector<element_type>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a][b] = static_cast<element_type>((a + b) % n);
      }
    }
    return table;
  }

  Table chain_table(std::size_t n) {
    Table table(n, std::vector<element_type>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a][b] = static_cast<element_type>(std::min(a, b));
      }
    }
    return table;
  }

  ////////////////////////////////////////////////////////////////////////
  // The catalog
  ////////////////////////////////////////////////////////////////////////

  namespace {
    PartialBijection pbij(std::vector<int> const& one_based) {
      std::vector<element_type> image;
      for (int x : one_based) {
        image.push_back(x == 0 ? PartialBijection::undefined
                               : static_cast<element_type>(x - 1));
      }
      return PartialBijection(image);
    }

    InverseSemigroup generated(std::size_t                          degree,
                               std::vector<PartialBijection> const& gens) {
      return from_partial_bijection_generators(degree, gens).semigroup;
    }

    InverseSemigroup brandt_aperiodic() {
      return build_brandt(cyclic_group_table(1), 2);
    }

    std::vector<CatalogEntry> make_catalog() {
      // 0 < a, b < 1 with a, b incomparable
      Table const diamond = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2},
                             {0, 1, 2, 3}};
      return {
          {"Trivial", "trivial group",
           [] { return build_group(cyclic_group_table(1)); }},
          {"C2", "cyclic group of order 2",
           [] { return build_group(cyclic_group_table(2)); }},
          {"C4", "cyclic group of order 4",
           [] { return build_group(cyclic_group_table(4)); }},
          {"Chain2", "2-element chain",
           [] { return build_semilattice(chain_table(2)); }},
          {"Chain4", "4-element chain",
           [] { return build_semilattice(chain_table(4)); }},
          {"Diamond4", "4-element diamond semilattice",
           [diamond] { return build_semilattice(diamond); }},
          {"B2", "aperiodic Brandt semigroup B(1, 2)", brandt_aperiodic},
          {"BC2_2", "Brandt semigroup B(C2, 2)",
           [] { return build_brandt(cyclic_group_table(2), 2); }},
          {"I2", "symmetric inverse monoid of degree 2",
           [] { return build_symmetric_inverse_monoid(2); }},
          {"I3", "symmetric inverse monoid of degree 3",
           [] { return build_symmetric_inverse_monoid(3); }},
          {"CliffC2", "C2 above the trivial group on a 2-chain",
           [] {
             return build_clifford(chain_table(2),
                                   {cyclic_group_table(1),
                                    cyclic_group_table(2)},
                                   {{1, 0, {0, 0}}});
           }},
          {"CliffC4C2", "C4 above C2 on a 2-chain, linked by reduction mod 2",
           [] {
             return build_clifford(chain_table(2),
                                   {cyclic_group_table(2),
                                    cyclic_group_table(4)},
                                   {{1, 0, {0, 1, 0, 1}}});
           }},
          {"EUnitary8",
           "generated by (1 2)(3 4) and the identity on {1, 2, 3}",
           [] {
             return generated(4, {pbij({2, 1, 4, 3}), pbij({1, 2, 3, 0})});
           }},
          {"EUnitary8Zero", "EUnitary8 with a zero adjoined",
           [] {
             return generated(4,
                              {pbij({2, 1, 4, 3}), pbij({1, 2, 3, 0}),
                               pbij({0, 0, 0, 0})});
           }},
          {"Gen6_10",
           "generated by [1 2 - 5 4 -] and [2 1 - 6 3 -] on 6 points",
           [] {
             return generated(6, {pbij({1, 2, 0, 5, 4, 0}),
                                  pbij({2, 1, 0, 6, 3, 0})});
           }},
          {"C2xChain2", "C2 x 2-chain",
           [] {
             return direct_product(build_group(cyclic_group_table(2)),
                                   build_semilattice(chain_table(2)));
           }},
          {"B2xC2", "B2 x C2",
           [] {
             return direct_product(brandt_aperiodic(),
                                   build_group(cyclic_group_table(2)));
           }},
          {"B2xChain2", "B2 x 2-chain",
           [] {
             return direct_product(brandt_aperiodic(),
                                   build_semilattice(chain_table(2)));
           }},
          {"I2xC2", "I2 x C2",
           [] {
             return direct_product(build_symmetric_inverse_monoid(2),
                                   build_group(cyclic_group_table(2)));
           }},
      };
    }
  }  // namespace

  std::vector<CatalogEntry> const& catalog() {
    static std::vector<CatalogEntry> const entries = make_catalog();
    return entries;
  }

  CatalogEntry const& catalog_entry(std::string_view name) {
    for (auto const& entry : catalog()) {
      if (entry.name == name) {
        return entry;
      }
    }
    throw Error("no catalog entry named \"" + std::string(name) + "\"");
  }

}  // namespace congnet
