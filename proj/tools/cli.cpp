#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "congnet/catalog.hpp"
#include "congnet/errors.hpp"
#include "congnet/formats.hpp"
#include "congnet/kernel_trace.hpp"
#include "congnet/predicates.hpp"
#include "congnet/verifiers.hpp"

namespace congnet::cli {

  namespace {
    using nlohmann::ordered_json;

    struct UsageError : Error {
      using Error::Error;
    };

    struct Options {
      std::string              input;
      std::string              format = "isg1";
      std::vector<std::string> catalog_names;
      bool                     all_catalog = false;
      std::size_t              max_level   = DEFAULT_MAX_LEVEL;
      std::size_t              cap         = DEFAULT_LATTICE_CAP;
      std::string              report;
      bool                     json    = false;
      unsigned                 threads = 1;
      std::string              suites  = "all";
      std::string              range   = "1..3";
      std::string              family  = "all";
      std::string              action;
      std::string              name;
    };

    struct Subject {
      std::string      name;
      InverseSemigroup S;
    };

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    std::vector<Subject> load_subjects(Options const& opt) {
      std::vector<Subject> result;
      if (!opt.input.empty()) {
        std::ifstream in(opt.input);
        if (!in) {
          throw UsageError("cannot open " + opt.input);
        }
        result.push_back({std::filesystem::path(opt.input).stem().string(),
                          parse_semigroup(in, format_from_string(opt.format))});
      }
      for (auto const& name : opt.catalog_names) {
        result.push_back({name, catalog_entry(name).build()});
      }
      if (opt.all_catalog) {
        for (auto const& entry : catalog()) {
          result.push_back({entry.name, entry.build()});
        }
      }
      if (result.empty()) {
        throw UsageError("no input: give --input, --catalog or --all");
      }
      return result;
    }

    Subject load_one(Options const& opt) {
      auto subjects = load_subjects(opt);
      if (subjects.size() != 1) {
        throw UsageError("this command takes exactly one semigroup");
      }
      return std::move(subjects.front());
    }

    std::pair<std::size_t, std::size_t> parse_range(std::string const& s) {
      auto const dots = s.find("..");
      try {
        if (dots == std::string::npos) {
          auto const n = std::stoul(s);
          return {n, n};
        }
        auto const lo = std::stoul(s.substr(0, dots));
        auto const hi = std::stoul(s.substr(dots + 2));
        if (lo <= hi) {
          return {lo, hi};
        }
      } catch (std::exception const&) {
      }
      throw UsageError("bad range \"" + s + "\", expected a..b");
    }

    std::vector<std::string> split(std::string const& s, char sep) {
      std::vector<std::string> parts;
      std::stringstream        in(s);
      for (std::string part; std::getline(in, part, sep);) {
        if (!part.empty()) {
          parts.push_back(part);
        }
      }
      return parts;
    }

    ////////////////////////////////////////////////////////////////////////
    // validate
    ////////////////////////////////////////////////////////////////////////

    int cmd_validate(Options const& opt, std::string& text) {
      auto const subject = load_one(opt);
      auto const& S      = subject.S;
      std::vector<std::pair<std::string, bool>> const flags
          = {{"clifford", is_clifford(S)},
             {"e_unitary", is_e_unitary(S)},
             {"e_reflexive", is_e_reflexive(S)},
             {"fundamental", is_fundamental(S)},
             {"e_disjunctive", is_e_disjunctive(S)}};
      if (opt.json) {
        ordered_json j;
        j["name"]        = subject.name;
        j["order"]       = S.order();
        j["idempotents"] = S.idempotents().size();
        j["zero"]        = S.zero().has_value();
        for (auto const& [key, value] : flags) {
          j[key] = value;
        }
        text = j.dump(2) + "\n";
        return ok;
      }
      text = "order=" + std::to_string(S.order())
             + " |E|=" + std::to_string(S.idempotents().size())
             + " zero=" + yes_no(S.zero().has_value());
      for (auto const& [key, value] : flags) {
        text += " " + key + "=" + yes_no(value);
      }
      text += "\n";
      return ok;
    }

    ////////////////////////////////////////////////////////////////////////
    // network
    ////////////////////////////////////////////////////////////////////////

    int cmd_network(Options const& opt, std::string& text) {
      auto const subject = load_one(opt);
      auto const net     = compute_network(subject.S, opt.max_level);
      std::size_t const N = net.stabilization_level();
      std::vector<std::pair<std::string, Congruence const*>> const aliases
          = {{"sigma", &net.sigma()},
             {"eta", &net.eta()},
             {"nu", &net.nu()},
             {"pi", &net.pi()},
             {"lambda", &net.lambda()}};

      if (opt.json) {
        ordered_json j;
        j["name"]                = subject.name;
        j["order"]               = subject.S.order();
        j["stabilization_level"] = N;
        j["levels"]              = ordered_json::array();
        for (std::size_t n = 0; n <= N; ++n) {
          auto const level = net.level(n);
          j["levels"].push_back({{"n", n},
                                 {"alpha", emit_cng1(level.alpha.partition())},
                                 {"beta", emit_cng1(level.beta.partition())},
                                 {"meet", emit_cng1(level.meet.partition())}});
        }
        for (auto const& [key, rho] : aliases) {
          j["aliases"][key] = emit_cng1(rho->partition());
        }
        text = j.dump(2) + "\n";
        return ok;
      }
      text = "order=" + std::to_string(subject.S.order())
             + " stabilization_level=" + std::to_string(N) + "\n";
      for (std::size_t n = 0; n <= N; ++n) {
        auto const level = net.level(n);
        text += std::to_string(n) + ": alpha="
                + emit_cng1(level.alpha.partition())
                + " beta=" + emit_cng1(level.beta.partition())
                + " meet=" + emit_cng1(level.meet.partition()) + "\n";
      }
      for (auto const& [key, rho] : aliases) {
        text += key + "=" + emit_cng1(rho->partition()) + " classes="
                + std::to_string(rho->number_of_classes()) + "\n";
      }
      return ok;
    }

    ////////////////////////////////////////////////////////////////////////
    // lattice
    ////////////////////////////////////////////////////////////////////////

    int cmd_lattice(Options const& opt, std::string& text) {
      auto const subject = load_one(opt);
      auto const lattice
          = enumerate_congruence_lattice(subject.S, opt.cap, opt.threads);
      auto const edges = lattice.hasse_edges();
      if (opt.json) {
        ordered_json j;
        j["name"]        = subject.name;
        j["order"]       = subject.S.order();
        j["congruences"] = ordered_json::array();
        for (auto const& rho : lattice.congruences()) {
          j["congruences"].push_back(emit_cng1(rho.partition()));
        }
        j["hasse"] = ordered_json::array();
        for (auto const& [lo, hi] : edges) {
          j["hasse"].push_back({lo, hi});
        }
        text = j.dump(2) + "\n";
        return ok;
      }
      text = "order=" + std::to_string(subject.S.order())
             + " congruences=" + std::to_string(lattice.size()) + "\n";
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        text += std::to_string(i) + ": " + emit_cng1(lattice[i].partition())
                + " classes="
                + std::to_string(lattice[i].number_of_classes()) + "\n";
      }
      for (auto const& [lo, hi] : edges) {
        text += "covers " + std::to_string(lo) + " " + std::to_string(hi)
                + "\n";
      }
      return ok;
    }

    ////////////////////////////////////////////////////////////////////////
    // verify
    ////////////////////////////////////////////////////////////////////////

    std::vector<std::string> const ALL_SUITES
        = {"kercliff",  "boeu",        "kercliffcon", "boeuc",
           "kccex",     "boeuex",      "minimality",  "class",
           "ker",       "quotient",    "equivalent",  "sublattice",
           "coincidences"};

    std::optional<bool> guarded(std::function<bool()> const& f) {
      try {
        return f();
      } catch (LatticeTooLarge const&) {
        return std::nullopt;
      }
    }

    SuiteReport single(std::string suite, std::size_t n, std::string label,
                       std::function<bool()> const& f) {
      SuiteReport report;
      report.suite = std::move(suite);
      report.n     = n;
      report.kind  = SuiteReport::Kind::conjunction;
      report.add(std::move(label), guarded(f));
      return report;
    }

    std::vector<Family> families(std::string const& which) {
      if (which == "all") {
        return {Family::A, Family::A_prime, Family::B, Family::B_prime};
      }
      std::vector<Family> result;
      for (auto const& name : split(which, ',')) {
        result.push_back(family_from_string(name));
      }
      return result;
    }

    std::vector<SuiteReport> run_suite(Analysis const& A,
                                       std::string const& suite,
                                       std::size_t lo, std::size_t hi,
                                       std::string const& family) {
      std::vector<SuiteReport> out;
      auto const&              net = A.network();
      if (suite == "coincidences") {
        out.push_back(check_coincidences(A));
        return out;
      }
      for (std::size_t n = lo; n <= hi; ++n) {
        if (suite == "kercliff" && n >= 1) {
          out.push_back(suite_kercliff(A, n));
        } else if (suite == "boeu" && n >= 1) {
          out.push_back(suite_boeu(A, n));
        } else if ((suite == "kercliffcon" || suite == "boeuc") && n >= 1) {
          SuiteReport report;
          report.suite = suite;
          report.n     = n;
          report.kind  = SuiteReport::Kind::conjunction;
          if (!A.has_lattice()) {
            report.add("every congruence", std::nullopt);
          } else {
            for (auto const& rho : A.lattice().congruences()) {
              auto const r = suite == "kercliffcon"
                                 ? suite_kercliffcon(A, rho, n)
                                 : suite_boeuc(A, rho, n);
              report.add("rho=" + emit_cng1(rho.partition()), r.all_agree());
            }
          }
          out.push_back(std::move(report));
        } else if (suite == "kccex" && n >= 1) {
          out.push_back(single(suite, n, "[alpha_{n+2}, beta_{n+1}]",
                               [&] { return check_kercliff_interval(A, n); }));
        } else if (suite == "boeuex" && n >= 1) {
          out.push_back(single(suite, n, "[beta_{n+2}, alpha_{n+1}]",
                               [&] { return check_boeu_interval(A, n); }));
        } else if (suite == "minimality") {
          SuiteReport report;
          report.suite = suite;
          report.n     = n;
          report.kind  = SuiteReport::Kind::conjunction;
          for (auto f : families(family)) {
            report.add(to_string(f), guarded([&] {
                         return check_minimality(A, n, f);
                       }));
          }
          out.push_back(std::move(report));
        } else if (suite == "class" && n >= 2) {
          out.push_back(single(suite, n, "class",
                               [&] { return check_prop_class(A, n); }));
        } else if (suite == "ker" && n >= 1) {
          out.push_back(
              single(suite, n, "ker", [&] { return check_prop_ker(A, n); }));
        } else if (suite == "equivalent" && n >= 2) {
          out.push_back(single(suite, n, "B_n",
                               [&] { return check_b_n_equivalence(A, n); }));
        } else if (suite == "sublattice" && n >= 1) {
          out.push_back(single(suite, n, "sublattice", [&] {
            return verify_sublattice_identity(net, n)
                   && network_is_sublattice(net);
          }));
        } else if (suite == "quotient") {
          SuiteReport report;
          report.suite = suite;
          report.n     = n;
          report.kind  = SuiteReport::Kind::conjunction;
          for (auto f : {Family::A, Family::B}) {
            for (std::size_t m = 0; m <= n; ++m) {
              report.add(to_string(f) + " m=" + std::to_string(m),
                         guarded([&] {
                           return check_prop_quotient(A, m, n - m, f);
                         }));
            }
          }
          out.push_back(std::move(report));
        }
      }
      return out;
    }

    int cmd_verify(Options const& opt, std::string& text) {
      auto const [lo, hi] = parse_range(opt.range);
      std::vector<std::string> suites
          = opt.suites == "all" ? ALL_SUITES : split(opt.suites, ',');
      for (auto& s : suites) {
        s = s == "net" ? "minimality" : s;
        if (std::find(ALL_SUITES.begin(), ALL_SUITES.end(), s)
            == ALL_SUITES.end()) {
          throw UsageError("unknown suite \"" + s + "\"");
        }
      }
      families(opt.family);

      int          code = ok;
      ordered_json j    = ordered_json::array();
      for (auto const& subject : load_subjects(opt)) {
        Analysis const A(subject.S,
                         {opt.cap, opt.max_level, opt.threads});
        for (auto const& suite : suites) {
          for (auto const& r : run_suite(A, suite, lo, hi, opt.family)) {
            code = r.all_agree() ? code : disagreement;
            if (opt.json) {
              ordered_json conditions = ordered_json::array();
              for (std::size_t i = 0; i < r.values.size(); ++i) {
                conditions.push_back(
                    {{"label", r.labels[i]},
                     {"value", r.values[i] ? ordered_json(*r.values[i])
                                           : ordered_json(nullptr)}});
              }
              j.push_back({{"name", subject.name},
                           {"suite", r.suite},
                           {"n", r.n},
                           {"verdict", r.verdict_string()},
                           {"vector", r.vector_string()},
                           {"conditions", conditions}});
            } else {
              text += subject.name + " " + r.suite + " " + std::to_string(r.n)
                      + " " + r.verdict_string() + " " + r.vector_string()
                      + "\n";
            }
          }
        }
      }
      if (opt.json) {
        text = j.dump(2) + "\n";
      }
      return code;
    }

    ////////////////////////////////////////////////////////////////////////
    // catalog
    ////////////////////////////////////////////////////////////////////////

    int cmd_catalog(Options const& opt, std::string& text) {
      if (opt.action == "list") {
        ordered_json j = ordered_json::array();
        for (auto const& entry : catalog()) {
          auto const order = entry.build().order();
          if (opt.json) {
            j.push_back({{"name", entry.name},
                         {"order", order},
                         {"description", entry.description}});
          } else {
            text += entry.name + " order=" + std::to_string(order) + " "
                    + entry.description + "\n";
          }
        }
        if (opt.json) {
          text = j.dump(2) + "\n";
        }
        return ok;
      } else if (opt.action == "emit") {
        if (opt.name.empty()) {
          throw UsageError("catalog emit needs a name");
        }
        auto const& entry = catalog_entry(opt.name);
        text = "# " + entry.name + ": " + entry.description + "\n"
               + emit_isg1(entry.build());
        return ok;
      }
      throw UsageError("catalog action must be list or emit");
    }

    void add_input_options(CLI::App* app, Options& opt) {
      app->add_option("--input", opt.input, "semigroup file");
      app->add_option("--format", opt.format, "input format")
          ->check(CLI::IsMember({"isg1", "pbj1"}));
      app->add_option("--catalog", opt.catalog_names,
                      "bundled catalog entry");
    }

    void add_output_options(CLI::App* app, Options& opt) {
      app->add_option("--report", opt.report, "also write output here");
      app->add_flag("--json", opt.json, "JSON output");
    }
  }  // namespace

  int run(std::vector<std::string> args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"congruence networks on finite inverse semigroups",
                 "congnet"};
    app.require_subcommand(1);
    Options opt;

    auto* validate = app.add_subcommand("validate", "check the axioms");
    add_input_options(validate, opt);
    add_output_options(validate, opt);

    auto* network = app.add_subcommand("network", "compute the min network");
    add_input_options(network, opt);
    add_output_options(network, opt);
    network->add_option("--max-level", opt.max_level, "level cap");

    auto* lattice = app.add_subcommand("lattice", "enumerate congruences");
    add_input_options(lattice, opt);
    add_output_options(lattice, opt);
    lattice->add_option("--cap", opt.cap, "largest order enumerated");
    lattice->add_option("--threads", opt.threads, "worker threads")
        ->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_input_options(verify, opt);
    add_output_options(verify, opt);
    verify->add_flag("--all", opt.all_catalog, "whole catalog");
    verify->add_option("--suites", opt.suites, "comma separated, or all");
    verify->add_option("--n", opt.range, "level range a..b");
    verify->add_option("--family", opt.family,
                       "A, B, Aprime, Bprime, or all (minimality)");
    verify->add_option("--max-level", opt.max_level, "level cap");
    verify->add_option("--cap", opt.cap, "largest order enumerated");
    verify->add_option("--threads", opt.threads, "worker threads")
        ->check(CLI::PositiveNumber);

    auto* cat = app.add_subcommand("catalog", "list or emit bundled entries");
    cat->add_option("action", opt.action, "list | emit")->required();
    cat->add_option("name", opt.name, "entry to emit");
    cat->add_flag("--json", opt.json, "JSON output");

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? ok : usage_error;
    }

    std::string text;
    int         code = ok;
    try {
      if (validate->parsed()) {
        code = cmd_validate(opt, text);
      } else if (network->parsed()) {
        code = cmd_network(opt, text);
      } else if (lattice->parsed()) {
        code = cmd_lattice(opt, text);
      } else if (verify->parsed()) {
        code = cmd_verify(opt, text);
      } else {
        code = cmd_catalog(opt, text);
      }
    } catch (ParseError const& e) {
      err << "parse error: " << e.what() << "\n";
      return parse_error;
    } catch (InvalidSemigroup const& e) {
      err << "invalid: " << e.what() << "\n";
      return validation_failed;
    } catch (ClosureExceedsLimit const& e) {
      err << "invalid: " << e.what() << "\n";
      return validation_failed;
    } catch (EmptyGeneratorSet const& e) {
      err << "invalid: " << e.what() << "\n";
      return validation_failed;
    } catch (NotStabilized const& e) {
      err << e.what() << "\n";
      return not_stabilized;
    } catch (LatticeTooLarge const& e) {
      err << e.what() << "\n";
      return lattice_too_large;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return usage_error;
    }

    out << text;
    if (!opt.report.empty()) {
      std::ofstream file(opt.report);
      if (!file || !(file << text)) {
        err << "error: cannot write " << opt.report << "\n";
        return usage_error;
      }
    }
    return code;
  }

}  // namespace congnet::cli
