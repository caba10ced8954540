#include "congnet/formats.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>

#include "congnet/errors.hpp"

namespace congnet {

  Format format_from_string(std::string_view s) {
    if (s == "isg1") {
      return Format::isg1;
    } else if (s == "pbj1") {
      return Format::pbj1;
    }
    throw Error("unknown format \"" + std::string(s) + "\"");
  }

  std::string to_string(Format f) {
    return f == Format::isg1 ? "isg1" : "pbj1";
  }

  namespace {
    std::string trim(std::string const& s) {
      auto const first = s.find_first_not_of(" \t");
      if (first == std::string::npos) {
        return {};
      }
      return s.substr(first, s.find_last_not_of(" \t") - first + 1);
    }

    struct Line {
      std::size_t              number;
      std::vector<std::string> tokens;
    };

    // Non-empty lines with comments stripped, split on whitespace.
    std::vector<Line> tokenize(std::istream& in) {
      std::vector<Line> lines;
      std::string       text;
      for (std::size_t number = 1; std::getline(in, text); ++number) {
        text = text.substr(0, text.find('#'));
        std::istringstream words(text);
        Line               line{number, {}};
        for (std::string w; words >> w;) {
          line.tokens.push_back(w);
        }
        if (!line.tokens.empty()) {
          lines.push_back(std::move(line));
        }
      }
      return lines;
    }

    std::size_t to_number(std::string const& token, std::size_t line) {
      std::size_t result = 0;
      auto [ptr, ec]
          = std::from_chars(token.data(), token.data() + token.size(), result);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected a non-negative integer, got \""
                                   + token + "\"");
      }
      return result;
    }

    std::size_t header(std::vector<Line> const& lines, char const* what) {
      if (lines.empty()) {
        throw ParseError(1, std::string("missing ") + what + " line");
      }
      if (lines[0].tokens.size() != 1) {
        throw ParseError(lines[0].number,
                         std::string("the ") + what
                             + " line must contain a single integer");
      }
      return to_number(lines[0].tokens[0], lines[0].number);
    }
  }  // namespace

  InverseSemigroup parse_isg1(std::istream& in) {
    auto const        lines = tokenize(in);
    std::size_t const n     = header(lines, "order");
    if (n == 0) {
      throw ParseError(lines[0].number, "order must be positive");
    }
    if (lines.size() != n + 1) {
      std::size_t const at = lines.size() > n + 1 ? lines[n + 1].number
                                                  : lines.back().number;
      throw ParseError(at, "expected " + std::to_string(n) + " rows, got "
                               + std::to_string(lines.size() - 1));
    }
    Table table(n);
    for (std::size_t r = 0; r < n; ++r) {
      auto const& line = lines[r + 1];
      if (line.tokens.size() != n) {
        throw ParseError(line.number,
                         "expected " + std::to_string(n) + " entries, got "
                             + std::to_string(line.tokens.size()));
      }
      for (auto const& token : line.tokens) {
        std::size_t const x = to_number(token, line.number);
        if (x >= n) {
          throw ParseError(line.number, "entry " + token + " out of range");
        }
        table[r].push_back(static_cast<element_type>(x));
      }
    }
    return InverseSemigroup::from_table(table);
  }

  std::string emit_isg1(InverseSemigroup const& S) {
    std::string out = std::to_string(S.order()) + "\n";
    for (element_type a = 0; a < S.order(); ++a) {
      for (element_type b = 0; b < S.order(); ++b) {
        out += (b == 0 ? "" : " ") + std::to_string(S.product(a, b));
      }
      out += "\n";
    }
    return out;
  }

  GeneratorFile parse_pbj1(std::istream& in) {
    auto const    lines = tokenize(in);
    GeneratorFile file;
    file.degree = header(lines, "degree");
    if (file.degree == 0) {
      throw ParseError(lines[0].number, "degree must be positive");
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
      auto const& line = lines[i];
      if (line.tokens.size() != file.degree) {
        throw ParseError(line.number,
                         "expected " + std::to_string(file.degree)
                             + " tokens, got "
                             + std::to_string(line.tokens.size()));
      }
      std::vector<element_type> image;
      for (auto const& token : line.tokens) {
        if (token == "-") {
          image.push_back(PartialBijection::undefined);
          continue;
        }
        std::size_t const x = to_number(token, line.number);
        if (x == 0 || x > file.degree) {
          throw ParseError(line.number, "point " + token + " out of range");
        }
        image.push_back(static_cast<element_type>(x - 1));
      }
      try {
        file.generators.emplace_back(image);
      } catch (Error const& e) {
        throw ParseError(line.number, e.what());
      }
    }
    return file;
  }

  std::string emit_pbj1(GeneratorFile const& file) {
    std::string out = std::to_string(file.degree) + "\n";
    for (auto const& g : file.generators) {
      for (std::size_t x = 0; x < g.degree(); ++x) {
        out += x == 0 ? "" : " ";
        out += g[x] == PartialBijection::undefined ? std::string("-")
                                                   : std::to_string(g[x] + 1);
      }
      out += "\n";
    }
    return out;
  }

  GeneratedSemigroup parse_pbj1_closure(std::istream& in, std::size_t cap) {
    auto const file = parse_pbj1(in);
    return from_partial_bijection_generators(file.degree, file.generators,
                                             cap);
  }

  InverseSemigroup parse_semigroup(std::istream& in, Format format) {
    return format == Format::isg1 ? parse_isg1(in)
                                  : parse_pbj1_closure(in).semigroup;
  }

  std::string emit_cng1(Partition const& p) {
    std::string out;
    for (std::size_t a = 0; a < p.size(); ++a) {
      out += (a == 0 ? "" : ",") + std::to_string(p.class_of(a));
    }
    return out;
  }

  Partition parse_cng1(std::string_view line) {
    std::string text(line);
    for (char& c : text) {
      c = c == ',' ? ' ' : c;
    }
    std::istringstream        words(text);
    std::vector<std::uint32_t> labels;
    for (std::string w; words >> w;) {
      labels.push_back(static_cast<std::uint32_t>(to_number(w, 1)));
    }
    if (labels.empty()) {
      throw ParseError(1, "empty congruence");
    }
    return Partition::from_labels(labels);
  }

  Manifest parse_manifest(std::istream& in) {
    Manifest    result;
    std::string text, section;
    for (std::size_t number = 1; std::getline(in, text); ++number) {
      text = text.substr(0, text.find('#'));
      auto const first = text.find_first_not_of(" \t\r");
      if (first == std::string::npos) {
        continue;
      }
      text = text.substr(first, text.find_last_not_of(" \t\r") - first + 1);
      if (text.front() == '[') {
        if (text.back() != ']' || text.size() < 3) {
          throw ParseError(number, "malformed section header");
        }
        section = text.substr(1, text.size() - 2);
        result[section];
        continue;
      }
      auto const eq = text.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ParseError(number, "expected key=value");
      }
      if (section.empty()) {
        throw ParseError(number, "key=value outside a section");
      }
      result[section][trim(text.substr(0, eq))] = trim(text.substr(eq + 1));
    }
    return result;
  }

  std::string emit_manifest(Manifest const& manifest) {
    std::string out;
    for (auto const& [section, entries] : manifest) {
      out += (out.empty() ? "[" : "\n[") + section + "]\n";
      for (auto const& [key, value] : entries) {
        out += key + "=" + value + "\n";
      }
    }
    return out;
  }

}  // namespace congnet
