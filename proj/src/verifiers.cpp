#include "congnet/verifiers.hpp"

#include <algorithm>

#include "congnet/errors.hpp"
#include "congnet/kernel_trace.hpp"
#include "congnet/relations.hpp"

namespace congnet {

  ////////////////////////////////////////////////////////////////////////
  // Analysis
  ////////////////////////////////////////////////////////////////////////

  Analysis::Analysis(InverseSemigroup S, AnalysisOptions options)
      : _S(std::move(S)),
        _options(options),
        _network(compute_network(_S, options.max_level)),
        _mu(special_mu(_S)),
        _tau(special_tau(_S)) {
    if (_S.order() <= options.lattice_cap) {
      _lattice = enumerate_congruence_lattice(_S, options.lattice_cap,
                                              options.threads);
    }
  }

  CongruenceLattice const& Analysis::lattice() const {
    if (!_lattice) {
      throw LatticeTooLarge(_S.order(), _options.lattice_cap);
    }
    return *_lattice;
  }

  ////////////////////////////////////////////////////////////////////////
  // SuiteReport
  ////////////////////////////////////////////////////////////////////////

  void SuiteReport::add(std::string label, std::optional<bool> value) {
    labels.push_back(std::move(label));
    values.push_back(value);
  }

  std::vector<std::size_t> SuiteReport::disagreements() const {
    std::vector<std::size_t> result;
    if (kind == Kind::conjunction) {
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == false) {
          result.push_back(i + 1);
        }
      }
      return result;
    }
    std::size_t           trues = 0, falses = 0;
    std::optional<bool>   first;
    for (auto const& v : values) {
      if (v) {
        (*v ? trues : falses)++;
        first = first ? first : v;
      }
    }
    if (trues == 0 || falses == 0) {
      return result;
    }
    bool const minority = trues == falses ? !*first : trues < falses;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] == minority) {
        result.push_back(i + 1);
      }
    }
    return result;
  }

  std::string SuiteReport::vector_string() const {
    std::string result;
    for (auto const& v : values) {
      result += v ? (*v ? '1' : '0') : '?';
    }
    return result;
  }

  std::string SuiteReport::verdict_string() const {
    auto const bad = disagreements();
    if (bad.empty()) {
      return "AllAgree";
    }
    std::string result = "Disagreement(";
    for (std::size_t i = 0; i < bad.size(); ++i) {
      result += (i == 0 ? "" : ",") + std::to_string(bad[i]);
    }
    return result + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Helpers
  ////////////////////////////////////////////////////////////////////////

  namespace {
    SuiteReport new_report(std::string suite, std::size_t n,
                           SuiteReport::Kind kind
                           = SuiteReport::Kind::equivalence) {
      SuiteReport report;
      report.suite = std::move(suite);
      report.n     = n;
      report.kind  = kind;
      return report;
    }

    MinNetwork quotient_network(Congruence const& rho, std::size_t max_level) {
      return compute_network(quotient(rho).semigroup, max_level);
    }

    element_type dom(InverseSemigroup const& S, element_type a) {
      return S.product(S.inverse(a), a);
    }

    element_type ran(InverseSemigroup const& S, element_type a) {
      return S.product(a, S.inverse(a));
    }

    // e <= f for idempotents
    bool idempotent_leq(InverseSemigroup const& S, element_type e,
                        element_type f) {
      return S.product(e, f) == e;
    }

    template <typename Pred>
    std::optional<bool> exists_in_lattice(Analysis const& A, Pred pred) {
      if (!A.has_lattice()) {
        return std::nullopt;
      }
      auto const& all = A.lattice().congruences();
      return std::any_of(all.begin(), all.end(), pred);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // ker alpha_n is Clifford
  ////////////////////////////////////////////////////////////////////////

  SuiteReport suite_kercliff(Analysis const& A, std::size_t n) {
    if (n < 1) {
      throw Error("suite_kercliff needs n >= 1");
    }
    auto const& S       = A.semigroup();
    auto const& net     = A.network();
    auto const& alpha   = net.alpha(n);
    auto const& beta    = net.beta(n + 1);
    auto const  L       = green_L(S);
    auto const  R       = green_R(S);
    auto const  zeta    = centralizer_of_idempotents(S);
    auto const  alpha_L = alpha.partition().meet(L);
    auto const  alpha_R = alpha.partition().meet(R);
    std::size_t const size = S.order();

    auto report = new_report("kercliff", n);

    report.add("ker alpha_n is Clifford", is_ker_alpha_n_clifford(net, n));

    bool order_implication = true;
    for (element_type a = 0; a < size; ++a) {
      for (element_type b = 0; b < size; ++b) {
        if (alpha.related(a, b) && idempotent_leq(S, dom(S, a), dom(S, b))
            && !idempotent_leq(S, ran(S, a), ran(S, b))) {
          order_implication = false;
        }
      }
    }
    report.add("a alpha_n b, a^-1a <= b^-1b => aa^-1 <= bb^-1",
               order_implication);
    report.add("alpha_n n L = alpha_n n R", alpha_L == alpha_R);
    report.add("alpha_n n L is a congruence", is_congruence(S, alpha_L));
    report.add("alpha_n n R is a congruence", is_congruence(S, alpha_R));
    report.add("alpha_n n L = alpha_n n mu",
               alpha_L == alpha.partition().meet(A.mu().partition()));

    report.add("exists idempotent separating beta_{n-1}-is-over-E-unitary "
               "congruence",
               exists_in_lattice(A, [&](Congruence const& rho) {
                 return rho.is_idempotent_separating()
                        && is_beta_n_over_e_unitary(
                            quotient_network(rho, A.options().max_level),
                            n - 1);
               }));
    report.add("beta_{n+1} <= mu", beta.is_subset_of(A.mu()));
    report.add("(beta_{n+1})_t = epsilon", min_trace(beta).is_trivial());
    report.add("beta_{n+1} n F = epsilon",
               intersect(beta, relation_F(S)).is_diagonal());
    report.add("ker alpha_n <= E zeta", alpha.kernel().is_subset_of(zeta));

    bool implication = true;
    for (element_type x = 0; x < size; ++x) {
      for (element_type y = 0; y < size; ++y) {
        if (S.product(x, y) == x && alpha.related(dom(S, x), ran(S, y))
            && !zeta.contains(y)) {
          implication = false;
        }
      }
    }
    report.add("xy = x, x^-1x alpha_n yy^-1 => y in E zeta", implication);
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // beta_n is over E-unitary
  ////////////////////////////////////////////////////////////////////////

  SuiteReport suite_boeu(Analysis const& A, std::size_t n) {
    if (n < 1) {
      throw Error("suite_boeu needs n >= 1");
    }
    auto const& S         = A.semigroup();
    auto const& net       = A.network();
    auto const& beta      = net.beta(n);
    auto const& alpha     = net.alpha(n + 1);
    auto const& tau       = A.tau();
    auto const  beta_F    = intersect(beta, relation_F(S));
    auto const  beta_C    = intersect(beta, relation_C(S));
    auto const  beta_tau  = PairSet::of(beta.partition().meet(tau.partition()));
    std::size_t const size = S.order();

    auto report = new_report("boeu", n);

    report.add("beta_n is over E-unitary", is_beta_n_over_e_unitary(net, n));
    report.add("beta_n n F is a congruence", is_congruence(S, beta_F));
    report.add("beta_n n C is a congruence", is_congruence(S, beta_C));
    report.add("beta_n n F = beta_n n tau", beta_F == beta_tau);
    report.add("beta_n n C = beta_n n tau", beta_C == beta_tau);
    report.add("exists idempotent pure ker alpha_{n-1}-is-Clifford "
               "congruence",
               exists_in_lattice(A, [&](Congruence const& rho) {
                 return rho.is_idempotent_pure()
                        && is_ker_alpha_n_clifford(
                            quotient_network(rho, A.options().max_level),
                            n - 1);
               }));
    report.add("alpha_{n+1} <= tau", alpha.is_subset_of(tau));
    report.add("(alpha_{n+1})_k = epsilon", min_kernel(alpha).is_trivial());
    report.add("tr beta_n <= tr tau",
               beta.trace().is_finer_than(tau.trace()));

    bool implication = true;
    for (element_type x = 0; x < size; ++x) {
      for (element_type y = 0; y < size; ++y) {
        if (S.product(x, y) == x && alpha.related(dom(S, x), ran(S, y))
            && !S.is_idempotent(y)) {
          implication = false;
        }
      }
    }
    report.add("xy = x, x^-1x alpha_{n+1} yy^-1 => y in E", implication);
    report.add("alpha_{n+1} n L = epsilon",
               alpha.partition().meet(green_L(S)).number_of_classes()
                   == size);
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruence-level characterizations
  ////////////////////////////////////////////////////////////////////////

  Congruence relative_least(Congruence const& rho, Relative which,
                            std::size_t n) {
    auto const net = compute_network(quotient(rho).semigroup);
    return pullback(rho, which == Relative::ker_clifford ? net.alpha(n + 2)
                                                         : net.beta(n + 2));
  }

  SuiteReport suite_kercliffcon(Analysis const& A, Congruence const& rho,
                                std::size_t n) {
    if (n < 1) {
      throw Error("suite_kercliffcon needs n >= 1");
    }
    auto const net_q = quotient_network(rho, A.options().max_level);
    auto const least = pullback(rho, net_q.beta(n + 1));

    auto report = new_report("kercliffcon", n);
    report.add("rho is ker alpha_n-is-Clifford",
               is_ker_alpha_n_clifford(net_q, n));
    report.add("(beta_{n+1})_rho <= rho^T",
               least.is_subset_of(max_trace(rho)));
    report.add("tr (beta_{n+1})_rho = tr rho", least.trace() == rho.trace());
    return report;
  }

  SuiteReport suite_boeuc(Analysis const& A, Congruence const& rho,
                          std::size_t n) {
    if (n < 1) {
      throw Error("suite_boeuc needs n >= 1");
    }
    auto const net_q = quotient_network(rho, A.options().max_level);
    auto const least = pullback(rho, net_q.alpha(n + 1));

    auto report = new_report("boeuc", n);
    report.add("rho is beta_n-is-over-E-unitary",
               is_beta_n_over_e_unitary(net_q, n));
    report.add("(alpha_{n+1})_rho <= rho^K",
               A.has_lattice() ? std::optional<bool>(least.is_subset_of(
                   max_kernel(rho, A.lattice())))
                               : std::nullopt);
    report.add("ker (alpha_{n+1})_rho = ker rho",
               least.kernel() == rho.kernel());
    return report;
  }

  namespace {
    template <typename Suite>
    bool interval_positive(Analysis const& A, Congruence const& bottom,
                           Congruence const& top, std::size_t n,
                           Suite suite) {
      for (auto const& rho : A.lattice().congruences()) {
        if (!bottom.is_subset_of(rho) || !rho.is_subset_of(top)) {
          continue;
        }
        auto const report = suite(A, rho, n);
        for (auto const& v : report.values) {
          if (v == false) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  bool check_kercliff_interval(Analysis const& A, std::size_t n) {
    auto const& net = A.network();
    return interval_positive(A, net.alpha(n + 2), net.beta(n + 1), n,
                             suite_kercliffcon);
  }

  bool check_boeu_interval(Analysis const& A, std::size_t n) {
    auto const& net = A.network();
    return interval_positive(A, net.beta(n + 2), net.alpha(n + 1), n,
                             suite_boeuc);
  }

  ////////////////////////////////////////////////////////////////////////
  // Minimality
  ////////////////////////////////////////////////////////////////////////

  std::optional<Congruence> least_satisfying(Analysis const& A,
                                             ImplicationSpec spec) {
    return A.lattice().least([&](Congruence const& rho) {
      return satisfies_implication(
          quotient_network(rho, A.options().max_level), spec);
    });
  }

  bool check_minimality(Analysis const& A, std::size_t n, Family family) {
    auto const least = least_satisfying(A, {family, n});
    bool const is_a  = family == Family::A || family == Family::A_prime;
    auto const& target = is_a ? A.network().alpha(n) : A.network().beta(n);
    return least && *least == target;
  }

  bool check_prop_class(Analysis const& A, std::size_t n) {
    if (n < 2) {
      throw Error("check_prop_class needs n >= 2");
    }
    auto const& S      = A.semigroup();
    auto const& net    = A.network();
    auto const& kernel = net.alpha(n - 1).kernel();
    bool        hypothesis = true;
    for (auto const& cls : net.eta().partition().classes()) {
      ElementSet part(S.order());
      for (auto a : cls) {
        if (kernel.contains(a)) {
          part.insert(a);
        }
      }
      hypothesis = hypothesis && is_clifford(S, part);
    }
    return !hypothesis || is_ker_alpha_n_clifford(net, n);
  }

  bool check_prop_ker(Analysis const& A, std::size_t n) {
    if (n < 1) {
      throw Error("check_prop_ker needs n >= 1");
    }
    auto const& net = A.network();
    return !is_beta_n_over_e_unitary(net, n)
           || is_ker_alpha_n_e_reflexive(net, n - 1);
  }

  namespace {
    // Every class of rho containing an idempotent, taken as a semigroup
    // in its own right, satisfies spec.
    bool is_over_family(Congruence const& rho, ImplicationSpec spec,
                        std::size_t max_level) {
      auto const& Q       = rho.semigroup();
      auto const  classes = rho.partition().classes();
      std::vector<bool> done(classes.size(), false);
      for (auto e : Q.idempotents()) {
        auto const c = rho.partition().class_of(e);
        if (done[c]) {
          continue;
        }
        done[c]  = true;
        auto sub = restrict_to(Q, ElementSet(Q.order(), classes[c]));
        if (!satisfies_implication(compute_network(sub.semigroup, max_level),
                                   spec)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool check_prop_quotient(Analysis const& A, std::size_t m, std::size_t n,
                           Family family) {
    if (family != Family::A && family != Family::B) {
      throw Error("check_prop_quotient takes family A or B");
    }
    auto const max_level = A.options().max_level;
    auto const least = A.lattice().least([&](Congruence const& rho) {
      auto const  net_q = quotient_network(rho, max_level);
      auto const& cong
          = family == Family::A ? net_q.alpha(n) : net_q.beta(n);
      return is_over_family(cong, {family, m}, max_level);
    });
    auto const& net = A.network();
    return least
           && *least
                  == (family == Family::A ? net.alpha(m + n)
                                          : net.beta(m + n));
  }

  bool check_b_n_equivalence(Analysis const& A, std::size_t n) {
    if (n < 2) {
      throw Error("check_b_n_equivalence needs n >= 2");
    }
    auto const& net = A.network();
    return satisfies_implication(net, {Family::B, n})
           == is_beta_n_over_e_unitary(net, n - 2);
  }

  ////////////////////////////////////////////////////////////////////////
  // Coincidences
  ////////////////////////////////////////////////////////////////////////

  SuiteReport check_coincidences(Analysis const& A) {
    auto const& S     = A.semigroup();
    auto const& net   = A.network();
    auto const  omega = Congruence::universal(S);
    auto const& mu    = A.mu();
    auto const& tau   = A.tau();
    std::size_t const top = net.stabilization_level() + 2;

    auto over = [&net](std::size_t k) {
      return is_beta_n_over_e_unitary(net, k);
    };
    auto every = [top](std::size_t from, auto holds) {
      for (std::size_t n = from; n <= top; ++n) {
        if (!holds(n)) {
          return false;
        }
      }
      return true;
    };
    auto const& a     = [&net](std::size_t n) -> Congruence const& {
      return net.alpha(n);
    };
    auto const& b     = [&net](std::size_t n) -> Congruence const& {
      return net.beta(n);
    };
    bool const trivial_top = net.sigma() == omega && net.eta() == omega;

    auto report = new_report("coincidences", 0, SuiteReport::Kind::conjunction);
    report.add("(1) n>=2: alpha_n = omega <=> sigma = eta = omega <=> "
               "beta_n = omega",
               every(2, [&](std::size_t n) {
                 return (a(n) == omega) == trivial_top
                        && trivial_top == (b(n) == omega);
               }));
    report.add("(2) n>=3: alpha_n = sigma <=> beta_{n-1} = sigma",
               every(3, [&](std::size_t n) {
                 return (a(n) == net.sigma()) == (b(n - 1) == net.sigma());
               }));
    report.add("(3) n>=2: alpha_n = eta <=> beta_{n+1} = eta",
               every(2, [&](std::size_t n) {
                 return (a(n) == net.eta()) == (b(n + 1) == net.eta());
               }));
    report.add("(4) n>=4: alpha_n = nu <=> beta_{n-1} = nu",
               every(4, [&](std::size_t n) {
                 return (a(n) == net.nu()) == (b(n - 1) == net.nu());
               }));
    report.add("(5) n>=3: alpha_n = pi <=> beta_{n+1} = pi",
               every(3, [&](std::size_t n) {
                 return (a(n) == net.pi()) == (b(n + 1) == net.pi());
               }));
    report.add("(6) n>=4: alpha_n = lambda <=> beta_{n+1} = lambda",
               every(4, [&](std::size_t n) {
                 return (a(n) == net.lambda()) == (b(n + 1) == net.lambda());
               }));
    report.add("(7) n>=3: alpha_n = mu <=> beta_{n-3}-over-E-unitary and "
               "fundamental",
               every(3, [&](std::size_t n) {
                 return (a(n) == mu) == (over(n - 3) && mu.is_trivial());
               }));
    report.add("(8) n>=1: alpha_n = tau <=> beta_{n-1}-over-E-unitary and "
               "tr tau = tr beta_{n-1}",
               every(1, [&](std::size_t n) {
                 return (a(n) == tau)
                        == (over(n - 1) && tau.trace() == b(n - 1).trace());
               }));
    report.add("(9) n>=2: beta_n = tau <=> beta_{n-2}-over-E-unitary and "
               "E-disjunctive",
               every(2, [&](std::size_t n) {
                 return (b(n) == tau) == (over(n - 2) && tau.is_trivial());
               }));
    return report;
  }

  bool is_converse_counterexample(Analysis const& A) {
    auto const& net = A.network();
    return is_ker_alpha_n_e_reflexive(net, 1)
           && !is_beta_n_over_e_unitary(net, 2);
  }

}  // namespace congnet
