#include "twopoint/domain.hpp"

#include <charconv>
#include <cstdio>

namespace twopoint {

std::string NormSpec::to_string() const {
  if (is_infinite()) return "inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), p_);
  return std::string(buf, res.ptr);
}

NormSpec NormSpec::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return NormSpec::infinity();
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{} || res.ptr != last)
    throw PreconditionError("cannot parse norm exponent '" + text + "'");
  return NormSpec(value);
}

}  // namespace twopoint
