#include "infchar/rational.hpp"

#include <algorithm>
#include <cctype>

#include "infchar/error.hpp"

namespace infchar {

namespace {

bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    require(is_plain_integer(s), errc::bad_scalar, "not a rational literal: '" + s + "'");
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  require(is_plain_integer(num) && is_plain_integer(den), errc::bad_scalar,
          "not a rational literal: '" + s + "'");
  Int q(den);
  require(q != 0, errc::bad_scalar, "zero denominator in '" + s + "'");
  return Rat(Int(num), q);
}

std::string show_rat(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

Int rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

std::optional<Int> isqrt_exact(const Int& n) {
  if (n < 0) return std::nullopt;
  Int s = sqrt(n);
  if (s * s == n) return s;
  return std::nullopt;
}

std::optional<Rat> rat_sqrt_exact(const Rat& r) {
  if (r < 0) return std::nullopt;
  auto sn = isqrt_exact(numerator(r));
  auto sd = isqrt_exact(denominator(r));
  if (!sn || !sd) return std::nullopt;
  return Rat(*sn, *sd);
}

std::vector<Int> positive_divisors(Int n, std::size_t step_cap) {
  if (n < 0) n = -n;
  require(n != 0, errc::internal_error, "divisors of zero requested");
  // factor by trial division
  std::vector<std::pair<Int, unsigned>> fac;
  std::size_t steps = 0;
  for (Int p = 2; p * p <= n; ++p) {
    if (++steps > step_cap)
      fail(errc::capacity_exceeded, "integer too large to factor for divisor enumeration");
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fac.emplace_back(p, e);
    }
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<Int> divs{Int(1)};
  for (auto& [p, e] : fac) {
    std::size_t base = divs.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > step_cap)
      fail(errc::capacity_exceeded, "too many divisors to enumerate");
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

RatPoly ratpoly_trim(RatPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int ratpoly_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly ratpoly_add(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return ratpoly_trim(std::move(r));
}

RatPoly ratpoly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return ratpoly_trim(std::move(r));
}

RatPoly ratpoly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return ratpoly_trim(std::move(r));
}

RatPoly ratpoly_scale(const RatPoly& a, const Rat& c) {
  if (c == 0) return {};
  RatPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

Rat ratpoly_eval(const RatPoly& p, const Rat& x) {
  Rat acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::pair<RatPoly, RatPoly> ratpoly_divmod(const RatPoly& a, const RatPoly& b) {
  require(!b.empty(), errc::division_by_zero, "polynomial division by zero");
  RatPoly rem = a, quot;
  int db = ratpoly_degree(b);
  if (ratpoly_degree(a) >= db) quot.assign(a.size() - b.size() + 1, Rat(0));
  while (ratpoly_degree(rem) >= db) {
    int k = ratpoly_degree(rem) - db;
    Rat c = rem.back() / b.back();
    quot[k] = c;
    for (int i = 0; i <= db; ++i) rem[k + i] -= c * b[i];
    rem = ratpoly_trim(std::move(rem));
  }
  return {ratpoly_trim(std::move(quot)), rem};
}

RatPoly ratpoly_gcd(RatPoly a, RatPoly b) {
  a = ratpoly_trim(std::move(a));
  b = ratpoly_trim(std::move(b));
  while (!b.empty()) {
    auto [q, r] = ratpoly_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) a = ratpoly_scale(a, Rat(1) / a.back());
  return a;
}

RatPoly ratpoly_derivative(const RatPoly& p) {
  if (p.size() <= 1) return {};
  RatPoly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(Int(i));
  return ratpoly_trim(std::move(r));
}

std::vector<Rat> ratpoly_rational_roots(RatPoly p) {
  p = ratpoly_trim(std::move(p));
  require(!p.empty(), errc::internal_error, "rational roots of the zero polynomial");
  std::vector<Rat> roots;
  // strip roots at zero
  std::size_t z = 0;
  while (z < p.size() && p[z] == 0) ++z;
  for (std::size_t i = 0; i < z; ++i) roots.emplace_back(0);
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(z));
  while (ratpoly_degree(p) >= 1) {
    // clear denominators and content: candidate roots are +-(p0 divisors)/(pn divisors)
    Int lcm = 1;
    for (auto& c : p) lcm = boost::multiprecision::lcm(lcm, denominator(c));
    std::vector<Int> ip;
    ip.reserve(p.size());
    Int gcd_all = 0;
    for (auto& c : p) {
      Int v = numerator(c * Rat(lcm));
      ip.push_back(v);
      gcd_all = boost::multiprecision::gcd(gcd_all, v);
    }
    if (gcd_all > 1)
      for (auto& v : ip) v /= gcd_all;
    bool found = false;
    auto nums = positive_divisors(ip.front());
    auto dens = positive_divisors(ip.back());
    for (auto& pn : nums) {
      for (auto& qd : dens) {
        for (int sign : {1, -1}) {
          Rat cand(sign * pn, qd);
          if (ratpoly_eval(p, cand) == 0) {
            roots.push_back(cand);
            auto [q, r] = ratpoly_divmod(p, RatPoly{-cand, Rat(1)});
            require(r.empty(), errc::internal_error, "deflation left a remainder");
            p = std::move(q);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  return roots;
}

}  // namespace infchar
