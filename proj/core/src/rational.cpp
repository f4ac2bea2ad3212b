#include "cyltn/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cyltn {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t k = from; k < to; ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& s) {
  size_t slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  size_t start = (!num.empty() && num[0] == '-') ? 1 : 0;
  bool ok = all_digits(num, start, num.size());
  if (ok && slash != std::string::npos) ok = all_digits(s, slash + 1, s.size());
  if (!ok) throw std::invalid_argument("malformed rational: '" + s + "'");

  Rational r(s, 10);
  // Check before canonicalize: canonicalizing a zero denominator divides by
  // zero inside GMP.
  if (slash != std::string::npos && r.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace cyltn
