// Executable versions of the equivalence, minimality and coincidence
// results about the min network, evaluated on a concrete semigroup.

#ifndef CONGNET_VERIFIERS_HPP_
#define CONGNET_VERIFIERS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "congruence.hpp"
#include "lattice.hpp"
#include "network.hpp"
#include "predicates.hpp"
#include "semigroup.hpp"

namespace congnet {

  struct AnalysisOptions {
    std::size_t lattice_cap = DEFAULT_LATTICE_CAP;
    std::size_t max_level   = DEFAULT_MAX_LEVEL;
    unsigned    threads     = 1;
  };

  //! Everything the verifiers need about one semigroup, computed once at
  //! construction: the min network, mu, tau and, when the order is within
  //! the lattice cap, the congruence lattice.
  class Analysis {
   public:
    explicit Analysis(InverseSemigroup S, AnalysisOptions options = {});

    InverseSemigroup const& semigroup() const noexcept { return _S; }
    MinNetwork const&       network() const noexcept { return _network; }
    Congruence const&       mu() const noexcept { return _mu; }
    Congruence const&       tau() const noexcept { return _tau; }
    AnalysisOptions const&  options() const noexcept { return _options; }

    bool has_lattice() const noexcept { return _lattice.has_value(); }
    //! Throws LatticeTooLarge when the order exceeds the cap.
    CongruenceLattice const& lattice() const;

   private:
    InverseSemigroup                 _S;
    AnalysisOptions                  _options;
    MinNetwork                       _network;
    Congruence                       _mu;
    Congruence                       _tau;
    std::optional<CongruenceLattice> _lattice;
  };

  //! Per-condition outcome of one suite. A condition is nullopt when it
  //! could not be evaluated (the lattice was unavailable).
  struct SuiteReport {
    //! equivalence: all evaluated conditions must have the same value.
    //! conjunction: all evaluated conditions must be true.
    enum class Kind { equivalence, conjunction };

    std::string                      suite;
    std::size_t                      n = 0;
    std::optional<std::size_t>       m;
    Kind                             kind = Kind::equivalence;
    std::vector<std::string>         labels;
    std::vector<std::optional<bool>> values;

    void add(std::string label, std::optional<bool> value);

    bool all_agree() const { return disagreements().empty(); }
    //! 1-based indices of the offending conditions: the minority side for
    //! an equivalence, the false ones for a conjunction.
    std::vector<std::size_t> disagreements() const;
    //! One character per condition: '1', '0' or '?'.
    std::string vector_string() const;
    //! "AllAgree" or "Disagreement(i,j,...)".
    std::string verdict_string() const;
  };

  //! The twelve characterizations of ker alpha_n being Clifford, n >= 1.
  SuiteReport suite_kercliff(Analysis const& A, std::size_t n);
  //! The eleven characterizations of beta_n-is-over-E-unitary, n >= 1.
  SuiteReport suite_boeu(Analysis const& A, std::size_t n);

  enum class Relative {
    //! least ker alpha_n-is-Clifford congruence containing rho
    ker_clifford,
    //! least beta_n-is-over-E-unitary congruence containing rho
    over_e_unitary
  };

  //! (alpha_{n+2})_rho or (beta_{n+2})_rho, obtained by pulling back
  //! alpha_{n+2} or beta_{n+2} of S / rho.
  Congruence relative_least(Congruence const& rho, Relative which,
                            std::size_t n);

  //! rho is ker alpha_n-is-Clifford, three ways. n >= 1.
  SuiteReport suite_kercliffcon(Analysis const& A, Congruence const& rho,
                                std::size_t n);
  //! rho is beta_n-is-over-E-unitary, three ways. n >= 1. Needs the
  //! lattice for rho^K.
  SuiteReport suite_boeuc(Analysis const& A, Congruence const& rho,
                          std::size_t n);

  //! Every congruence in [alpha_{n+2}, beta_{n+1}] passes suite_kercliffcon
  //! with all conditions true.
  bool check_kercliff_interval(Analysis const& A, std::size_t n);
  //! Every congruence in [beta_{n+2}, alpha_{n+1}] passes suite_boeuc with
  //! all conditions true.
  bool check_boeu_interval(Analysis const& A, std::size_t n);

  //! Least congruence rho in the lattice with S / rho satisfying spec.
  std::optional<Congruence> least_satisfying(Analysis const& A,
                                             ImplicationSpec spec);
  //! The least rho with S / rho satisfying the family at level n is
  //! alpha_n (A families) or beta_n (B families).
  bool check_minimality(Analysis const& A, std::size_t n, Family family);

  //! If ker alpha_{n-1} n N is Clifford for every eta-class N then
  //! ker alpha_n is Clifford. n >= 2.
  bool check_prop_class(Analysis const& A, std::size_t n);
  //! beta_n-is-over-E-unitary implies ker alpha_{n-1}-is-E-reflexive.
  bool check_prop_ker(Analysis const& A, std::size_t n);
  //! Family::A: alpha_{m+n} is the least rho with alpha_n(S / rho) over
  //! A_m-semigroups. Family::B: the same for beta_{m+n}, beta_n and B_m.
  //! Other families throw Error.
  bool check_prop_quotient(Analysis const& A, std::size_t m, std::size_t n,
                           Family family);
  //! For n >= 2: S satisfies (B_n) iff S is beta_{n-2}-is-over-E-unitary.
  bool check_b_n_equivalence(Analysis const& A, std::size_t n);

  //! The nine coincidence biconditionals, each checked for every n from
  //! its lower bound to stabilization_level + 2.
  SuiteReport check_coincidences(Analysis const& A);

  //! ker alpha_1 (= E omega) is E-reflexive but S is not
  //! beta_2-is-over-E-unitary: a witness that the converse of
  //! check_prop_ker fails at n = 2.
  bool is_converse_counterexample(Analysis const& A);

}  // namespace congnet

#endif  // CONGNET_VERIFIERS_HPP_
