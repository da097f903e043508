#include "hypermet/rational.hpp"

#include <numeric>
#include <sstream>

#include "hypermet/error.hpp"

namespace hypermet {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer parse_integer(std::string_view token) {
  if (!valid_integer_token(token))
    throw Error(ErrorCode::Parse, "malformed integer token '" + std::string(token) + "'");
  std::string s(token);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view token) {
  auto slash = token.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(token));
  auto num_tok = token.substr(0, slash);
  auto den_tok = token.substr(slash + 1);
  if (!valid_integer_token(num_tok) || !all_digits(den_tok))
    throw Error(ErrorCode::Parse, "malformed rational token '" + std::string(token) + "'");
  Integer den(std::string(den_tok), 10);
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in token '" + std::string(token) + "'");
  return make_rational(parse_integer(num_tok), den);
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

std::string format_vector(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string format_vector(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += to_string(v[i]);
  }
  return out + ")";
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 0) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return out;
}

IntVector primitive(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = v[i].get_num() * (l / v[i].get_den());
  return primitive(scaled);
}

IntVector normalized_ray(const IntVector& v) {
  IntVector p = primitive(v);
  for (const auto& x : p) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : p) y = -y;
    break;
  }
  return p;
}

IntVector normalized_ray(const RatVector& v) { return normalized_ray(primitive(v)); }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace hypermet
