#pragma once

#include "nsymkit/nsym.hpp"
#include "nsymkit/polyreal.hpp"
#include "nsymkit/qsym.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsymkit {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// "r[2,1] + 3/2 r[1,1,1]", "-2*psi[3]". All terms must share one basis and one degree.
NSymElem parse_nsym(std::string_view text);
QSymElem parse_qsym(std::string_view text);

std::string to_string(const NSymElem& x);
std::string to_string(const QSymElem& x);
std::string to_json(const NSymElem& x);
std::string to_json(const QSymElem& x);
std::string to_json(const NCPoly& p);
std::string to_json(const CPoly& p);

}  // namespace nsymkit
