#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hkit/presentation.hpp"
#include "hkit/simplicial.hpp"

namespace hkit {

/// Input language:
///
///   ring QQ[x,y,z];            # or GF(p)[...]; optional "lex" before ';'
///   ideal I = x^2 - y*z, x*y;
///   complex D = {1 2 3}, {2 3 4};
///   module M = free(0, 3) / [x, 0], [y^4, x];
///
/// One ring declaration followed by one object. Coefficients are integers or
/// fractions a/b; '#' starts a comment.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

enum class InputKind { Ideal, Complex, Module };

struct ParsedInput {
  Ring ring;
  InputKind kind = InputKind::Ideal;
  std::string name;
  std::optional<IdealData> ideal;
  std::optional<SimplicialComplex> complex;
  std::optional<GradedModulePresentation> module;

  /// S/I, k[Δ] or the module itself.
  GradedModulePresentation presentation() const;
  /// The ideal (Stanley-Reisner ideal for complexes); empty for modules.
  std::optional<IdealData> defining_ideal() const;
};

ParsedInput parse_input(std::string_view text);
/// Canonical text; parse_input(print_input(x)) reproduces x.
std::string print_input(const ParsedInput& input);
/// Same ring, kind, name and generators (term by term).
bool same_input(const ParsedInput& a, const ParsedInput& b);

}  // namespace hkit
