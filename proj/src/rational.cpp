#include "qprob/rational.hpp"

#include <cctype>

#include "qprob/error.hpp"

namespace qprob {

namespace {

bool is_plain_integer(const std::string& s, bool allow_minus) {
  if (s.empty()) return false;
  std::size_t start = 0;
  if (allow_minus && s[0] == '-') {
    start = 1;
    if (s.size() == 1) return false;
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  const std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
  const std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
  if (!is_plain_integer(num, /*allow_minus=*/true) ||
      !is_plain_integer(den, /*allow_minus=*/false)) {
    throw ParseError("bad rational literal: \"" + text + "\"");
  }
  mpz_class p(num, 10);
  mpz_class q(den, 10);
  if (q == 0) throw ParseError("bad rational literal (zero denominator): \"" + text + "\"");
  Rat value(p, q);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rat& value) {
  return value.get_str();
}

}  // namespace qprob
