#include "fz/rational.hpp"

namespace fz {

std::optional<Rat> parse_rat(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string::size_type slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (num.empty() || den.empty()) return std::nullopt;
  auto digits_ok = [](const std::string& s, bool sign_ok) {
    std::string::size_type i = 0;
    if (sign_ok && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false)) return std::nullopt;
  mpz_class n(num), d(den);
  if (d == 0) return std::nullopt;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0 && e < 0) throw ValidationError("rat_pow: zero base with negative exponent");
  unsigned long mag = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num().get_mpz_t(), mag);
  mpz_pow_ui(d.get_mpz_t(), base.get_den().get_mpz_t(), mag);
  Rat r(n, d);
  r.canonicalize();
  if (e < 0) return Rat(1) / r;
  return r;
}

long ceil_neg_log(const Rat& value, long base) {
  if (value <= 0 || value > 1) throw ValidationError("ceil_neg_log: value outside (0, 1]");
  if (base < 2) throw ValidationError("ceil_neg_log: base must be at least 2");
  long n = 0;
  Rat v = value;
  while (v < 1) {
    v *= base;
    ++n;
  }
  return n;
}

}  // namespace fz
