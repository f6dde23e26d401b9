#include "rational.hpp"

#include <cctype>
#include <cmath>

namespace otd {

Rat Rat::parse(const std::string& text) {
  if (text.empty()) fail(Errc::invalid_input, "empty rational literal");
  auto bad = [&]() { fail(Errc::invalid_input, "bad rational literal: " + text); };

  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty() || (s.size() == 1 && (s[0] == '+' || s[0] == '-'))) bad();
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) bad();
    try {
      return std::stoll(s);
    } catch (const std::exception&) {
      bad();
    }
    return 0;  // unreachable
  };

  std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    std::int64_t n = parse_int(text.substr(0, slash));
    std::int64_t d = parse_int(text.substr(slash + 1));
    if (d == 0) bad();
    return Rat(n, d);
  }
  std::size_t dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 18) bad();
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad();
    bool neg = !whole.empty() && whole[0] == '-';
    std::int64_t w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
    __int128 num = __int128(w < 0 ? -w : w) * den + f;
    if (neg || w < 0) num = -num;
    if (num > __int128(INT64_MAX) || num < -__int128(INT64_MAX))
      fail(Errc::invalid_input, "rational literal out of range: " + text);
    return Rat(static_cast<std::int64_t>(num), den);
  }
  return Rat(parse_int(text));
}

std::int64_t isqrt64(std::int64_t v) {
  if (v < 0) fail(Errc::invalid_input, "isqrt of a negative value");
  if (v == 0) return 0;
  std::int64_t q = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (q > 0 && q * q > v) --q;
  while ((q + 1) * (q + 1) <= v) ++q;
  return q;
}

}  // namespace otd
