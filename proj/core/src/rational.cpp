#include "continuum/rational.hpp"

#include <cctype>

namespace continuum {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && text[0] == '-') start = 1;
  const std::size_t slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = all_digits(text, start, text.size());
  } else {
    ok = all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
  }
  if (!ok) throw Error("not a rational: '" + text + "' (expected n or p/q)");
  Rat r(text, 10);
  if (r.get_den() == 0) throw Error("zero denominator in rational: '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& value) {
  return value.get_str();
}

}  // namespace continuum
