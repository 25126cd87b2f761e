#pragma once

#include <string>
#include <vector>

#include "gpc/frontend.hpp"

namespace gpc::test {

  inline Presentation path_raag() {
    return parse_spec("vertex a Z\nvertex b Z\nvertex c Z\nedge a b\nedge b c\n");
  }

  inline NormalForm el(Presentation const& p, std::string const& text) {
    return parse_element(p, text);
  }

  inline std::vector<NormalForm> els(Presentation const&             p,
                                     std::vector<std::string> const& texts) {
    std::vector<NormalForm> out;
    for (auto const& t : texts) {
      out.push_back(parse_element(p, t));
    }
    return out;
  }

  inline std::string str(Presentation const& p, NormalForm const& x) {
    return format(p, x);
  }

}  // namespace gpc::test
