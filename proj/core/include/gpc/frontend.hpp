#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "gpc/parabolic.hpp"
#include "gpc/words.hpp"

namespace gpc {

  class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column)
                             + ": " + message),
          line_(line), column_(column), message_(message) {}

    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return column_;
    }
    std::string const& message() const noexcept {
      return message_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
  };

  // Line-oriented presentation format:
  //   vertex <label> Z
  //   vertex <label> Z/<n>
  //   edge <label> <label>
  // '#' starts a comment.
  Presentation parse_spec(std::string_view text);

  // expr := term { "*" term }
  // term := factor [ "^" int ]
  // factor := label | "1" | "(" expr ")" | "[" expr "," expr "]"
  // A power of a single label is one syllable; [x,y] is x^-1 y^-1 x y.
  Word parse_word(Presentation const& p, std::string_view text);

  inline NormalForm parse_element(Presentation const& p, std::string_view text) {
    return reduce(p, parse_word(p, text));
  }

  // Comma-separated labels; the empty string is the empty set.
  VertexSet parse_vertex_set(Presentation const& p, std::string_view text);

  // "WORD@a,b" denotes WORD · G_{a,b} · WORD^-1.
  ParabolicSubgroup parse_parabolic(Presentation const& p, std::string_view text);

  bool is_valid_label(std::string_view label);

  // Syllables as label^exp joined by '*', exponent 1 omitted, identity "1".
  std::string format(Presentation const& p, Word const& w);
  inline std::string format(Presentation const& p, NormalForm const& x) {
    return format(p, x.word());
  }
  // Labels in vertex order, comma-separated, in braces.
  std::string format(Presentation const& p, VertexSet S);
  // The "WORD@a,b" form accepted by parse_parabolic.
  std::string format(Presentation const& p, ParabolicSubgroup const& P);

  // Inverse of parse_spec.
  std::string format_spec(Presentation const& p);

}  // namespace gpc
