#include "wpvol/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpvol {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);

  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }

  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "': zero denominator");
  if (text.front() == '-') p = -p;

  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace wpvol
