#include "infchar/ring.hpp"

#include <algorithm>
#include <set>

#include "infchar/error.hpp"

namespace infchar {

struct CoefficientRing::Impl {
  RatPoly min_poly;  // empty for QQ
  std::string generator;
  std::vector<std::string> variables;
  bool family = false;
};

namespace {

const std::string kEmpty;

// Monic integer polynomial equivalent to monic rational f under x -> y/L.
std::vector<Int> integerize_monic(const RatPoly& f) {
  Int l = 1;
  for (auto& c : f) l = boost::multiprecision::lcm(l, denominator(c));
  std::size_t d = f.size() - 1;
  std::vector<Int> g(f.size());
  // F(y) = L^d f(y/L): coefficient of y^i is f_i * L^(d-i)
  Int p = 1;
  for (std::size_t i = d + 1; i-- > 0;) {
    Rat c = f[i] * Rat(p);
    g[i] = numerator(c);
    p *= l;
  }
  return g;
}

Int ipoly_eval(const std::vector<Int>& p, const Int& x) {
  Int acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Kronecker search: does the monic integer polynomial F have a monic integer
// factor of degree k?  Interpolates candidates through divisor tuples of
// F(0), F(1), F(-1), ...
bool has_monic_factor_of_degree(const std::vector<Int>& f, std::size_t k) {
  std::vector<Int> points;
  for (Int x = 0; points.size() < k + 1; x = (x > 0 ? Int(-x) : Int(1 - x))) {
    if (ipoly_eval(f, x) == 0) return true;  // integer root: linear factor
    points.push_back(x);
  }
  std::vector<std::vector<Int>> divs;
  std::size_t combos = 1;
  for (auto& x : points) {
    auto d = positive_divisors(ipoly_eval(f, x));
    std::vector<Int> signed_divs;
    signed_divs.reserve(2 * d.size());
    for (auto& v : d) {
      signed_divs.push_back(v);
      signed_divs.push_back(-v);
    }
    divs.push_back(std::move(signed_divs));
    combos *= divs.back().size();
    require(combos <= 400000, errc::capacity_exceeded,
            "irreducibility search space too large for this minimal polynomial");
  }
  std::vector<std::size_t> idx(k + 1, 0);
  RatPoly fq(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) fq[i] = Rat(f[i]);
  while (true) {
    // Lagrange interpolation through (points[i], divs[i][idx[i]])
    RatPoly g{Rat(0)};
    for (std::size_t i = 0; i <= k; ++i) {
      RatPoly basis{Rat(1)};
      Rat denom(1);
      for (std::size_t j = 0; j <= k; ++j) {
        if (j == i) continue;
        basis = ratpoly_mul(basis, RatPoly{Rat(-points[j]), Rat(1)});
        denom *= Rat(points[i] - points[j]);
      }
      g = ratpoly_add(g, ratpoly_scale(basis, Rat(divs[i][idx[i]]) / denom));
    }
    bool candidate = ratpoly_degree(g) == static_cast<int>(k) && g.back() == 1;
    if (candidate)
      for (auto& c : g)
        if (!rat_is_integer(c)) candidate = false;
    if (candidate) {
      auto [q, r] = ratpoly_divmod(fq, g);
      if (r.empty()) return true;
    }
    std::size_t i = 0;
    while (i <= k && ++idx[i] == divs[i].size()) idx[i++] = 0;
    if (i > k) break;
  }
  return false;
}

}  // namespace

bool is_irreducible_over_q(const RatPoly& f) {
  require(!f.empty() && f.back() == 1, errc::schema_violation,
          "minimal polynomial must be monic");
  std::size_t d = f.size() - 1;
  require(d >= 1, errc::schema_violation, "minimal polynomial must have degree >= 1");
  if (d == 1) return true;
  if (f.front() == 0) return false;  // root at 0
  if (!ratpoly_rational_roots(f).empty()) return false;
  if (d <= 3) return true;  // no rational root and degree <= 3
  auto fi = integerize_monic(f);
  for (std::size_t k = 2; k <= d / 2; ++k)
    if (has_monic_factor_of_degree(fi, k)) return false;
  return true;
}

CoefficientRing::CoefficientRing() : impl_(std::make_shared<Impl>()) {}

CoefficientRing CoefficientRing::rationals() { return CoefficientRing(); }

CoefficientRing CoefficientRing::number_field(RatPoly min_poly, std::string generator) {
  min_poly = ratpoly_trim(std::move(min_poly));
  require(!min_poly.empty() && min_poly.back() == 1, errc::schema_violation,
          "minimal polynomial must be monic");
  std::size_t d = min_poly.size() - 1;
  require(d >= 1, errc::schema_violation, "minimal polynomial must have degree >= 1");
  require(d <= 6, errc::degree_cap_exceeded,
          "number fields are supported up to degree 6");
  if (d == 1) return rationals();
  require(is_irreducible_over_q(min_poly), errc::reducible_min_poly,
          "minimal polynomial is reducible over the rationals");
  require(!generator.empty(), errc::schema_violation, "empty generator name");
  auto impl = std::make_shared<Impl>();
  impl->min_poly = std::move(min_poly);
  impl->generator = std::move(generator);
  CoefficientRing r;
  r.impl_ = std::move(impl);
  return r;
}

CoefficientRing CoefficientRing::family(const CoefficientRing& base_field,
                                        std::vector<std::string> variables) {
  require(!base_field.is_family(), errc::schema_violation,
          "family rings must sit over a field");
  require(!variables.empty(), errc::schema_violation, "family ring needs variables");
  std::set<std::string> seen;
  for (auto& v : variables) {
    require(!v.empty(), errc::schema_violation, "empty variable name");
    require(seen.insert(v).second, errc::schema_violation, "duplicate variable '" + v + "'");
    require(v != base_field.generator_name(), errc::schema_violation,
            "variable '" + v + "' collides with the field generator");
  }
  auto impl = std::make_shared<Impl>();
  impl->min_poly = base_field.min_poly();
  impl->generator = base_field.generator_name();
  impl->variables = std::move(variables);
  impl->family = true;
  CoefficientRing r;
  r.impl_ = std::move(impl);
  return r;
}

bool CoefficientRing::is_rationals() const {
  return !impl_->family && impl_->min_poly.empty();
}
bool CoefficientRing::is_number_field() const {
  return !impl_->family && !impl_->min_poly.empty();
}
bool CoefficientRing::is_family() const { return impl_->family; }

CoefficientRing CoefficientRing::base_field() const {
  if (!is_family()) return *this;
  if (impl_->min_poly.empty()) return rationals();
  return number_field(impl_->min_poly, impl_->generator);
}

std::size_t CoefficientRing::field_degree() const {
  return impl_->min_poly.empty() ? 1 : impl_->min_poly.size() - 1;
}
const RatPoly& CoefficientRing::min_poly() const { return impl_->min_poly; }
const std::string& CoefficientRing::generator_name() const {
  return impl_->min_poly.empty() ? kEmpty : impl_->generator;
}
const std::vector<std::string>& CoefficientRing::variables() const { return impl_->variables; }

bool CoefficientRing::has_variable(const std::string& name) const {
  return std::find(impl_->variables.begin(), impl_->variables.end(), name) !=
         impl_->variables.end();
}

bool CoefficientRing::operator==(const CoefficientRing& o) const {
  if (impl_ == o.impl_) return true;
  return impl_->family == o.impl_->family && impl_->min_poly == o.impl_->min_poly &&
         impl_->generator == o.impl_->generator && impl_->variables == o.impl_->variables;
}

std::string CoefficientRing::describe() const {
  std::string base;
  if (impl_->min_poly.empty()) {
    base = "QQ";
  } else {
    base = "QQ[" + impl_->generator + "]/(";
    bool first = true;
    for (std::size_t i = impl_->min_poly.size(); i-- > 0;) {
      if (impl_->min_poly[i] == 0) continue;
      if (!first) base += " + ";
      base += show_rat(impl_->min_poly[i]);
      if (i >= 1) base += "*" + impl_->generator;
      if (i >= 2) base += "^" + std::to_string(i);
      first = false;
    }
    base += ")";
  }
  if (!impl_->family) return base;
  std::string vars;
  for (auto& v : impl_->variables) {
    if (!vars.empty()) vars += ", ";
    vars += v;
  }
  return base + "[" + vars + "]";
}

}  // namespace infchar
