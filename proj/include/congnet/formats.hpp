// Text exchange formats.
//
//   ISG1  line 1: order n; then n rows of n 0-based product indices.
//   PBJ1  line 1: degree d; then one generator per line, d tokens each,
//         a 1-based image point or '-' for undefined.
//   CNG1  one line of n canonical class labels.
//
// '#' starts a comment in ISG1 and PBJ1; blank lines are ignored. Parse
// errors carry the 1-based line number of the offending line.

#ifndef CONGNET_FORMATS_HPP_
#define CONGNET_FORMATS_HPP_

#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "partition.hpp"
#include "semigroup.hpp"

namespace congnet {

  enum class Format { isg1, pbj1 };

  //! "isg1" or "pbj1"; throws Error otherwise.
  Format      format_from_string(std::string_view s);
  std::string to_string(Format f);

  InverseSemigroup parse_isg1(std::istream& in);
  std::string      emit_isg1(InverseSemigroup const& S);

  struct GeneratorFile {
    std::size_t                   degree = 0;
    std::vector<PartialBijection> generators;
  };

  GeneratorFile      parse_pbj1(std::istream& in);
  std::string        emit_pbj1(GeneratorFile const& file);
  GeneratedSemigroup parse_pbj1_closure(std::istream& in,
                                        std::size_t cap = DEFAULT_CLOSURE_CAP);

  //! Parses either format; PBJ1 input is closed under composition.
  InverseSemigroup parse_semigroup(std::istream& in, Format format);

  //! Labels separated by commas, e.g. "0,0,1,2".
  std::string emit_cng1(Partition const& p);
  //! Accepts commas or whitespace between labels. The labels need not be
  //! canonical; the result is.
  Partition parse_cng1(std::string_view line);

  //! Sections "[name]" followed by "key=value" lines, e.g. the catalog
  //! manifest of expected facts.
  using Manifest = std::map<std::string, std::map<std::string, std::string>>;

  Manifest    parse_manifest(std::istream& in);
  std::string emit_manifest(Manifest const& manifest);

}  // namespace congnet

#endif  // CONGNET_FORMATS_HPP_
