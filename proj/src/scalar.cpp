#include "infchar/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "infchar/error.hpp"

namespace infchar {

namespace {

using Coeff = std::vector<Rat>;

bool coeff_is_zero(const Coeff& c) {
  return std::all_of(c.begin(), c.end(), [](const Rat& r) { return r == 0; });
}

Coeff coeff_zero(std::size_t d) { return Coeff(d, Rat(0)); }

Coeff coeff_add(const Coeff& a, const Coeff& b) {
  Coeff r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Coeff coeff_neg(const Coeff& a) {
  Coeff r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

// Product in QQ[a]/(min_poly); for the rationals (d = 1) this is plain
// rational multiplication.
Coeff coeff_mul(const Coeff& a, const Coeff& b, const RatPoly& min_poly) {
  std::size_t d = a.size();
  if (d == 1) return {a[0] * b[0]};
  std::vector<Rat> conv(2 * d - 1, Rat(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) conv[i + j] += a[i] * b[j];
  }
  for (std::size_t i = 2 * d - 2; i >= d; --i) {
    if (conv[i] == 0) continue;
    Rat c = conv[i];
    conv[i] = 0;
    for (std::size_t j = 0; j < d; ++j) conv[i - d + j] -= c * min_poly[j];
  }
  conv.resize(d);
  return conv;
}

std::tuple<RatPoly, RatPoly> egcd_bezout_u(RatPoly a, RatPoly b) {
  // returns (g, u) with u*a = g (mod b)
  RatPoly u0{Rat(1)}, u1{};
  while (!b.empty()) {
    auto [q, r] = ratpoly_divmod(a, b);
    RatPoly u2 = ratpoly_sub(u0, ratpoly_mul(q, u1));
    a = std::move(b);
    b = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return {a, u0};
}

Coeff coeff_inverse(const Coeff& a, const RatPoly& min_poly) {
  std::size_t d = a.size();
  if (d == 1) {
    require(a[0] != 0, errc::division_by_zero, "division by zero");
    return {Rat(1) / a[0]};
  }
  RatPoly ap(a.begin(), a.end());
  ap = ratpoly_trim(std::move(ap));
  require(!ap.empty(), errc::division_by_zero, "division by zero");
  auto [g, u] = egcd_bezout_u(ap, min_poly);
  require(ratpoly_degree(g) == 0, errc::internal_error,
          "minimal polynomial shares a factor with a field element");
  u = ratpoly_scale(u, Rat(1) / g[0]);
  auto [q, r] = ratpoly_divmod(u, min_poly);
  (void)q;
  r.resize(d, Rat(0));
  return r;
}

}  // namespace

Scalar::Scalar() : ring_(CoefficientRing::rationals()) {}

Scalar::Scalar(Rat v) : ring_(CoefficientRing::rationals()) {
  if (v != 0) terms_[{}] = {std::move(v)};
}

Scalar::Scalar(const Int& v) : Scalar(Rat(v)) {}

Scalar::Scalar(CoefficientRing ring, const Rat& v) : ring_(std::move(ring)) {
  if (v != 0) {
    Coeff c = coeff_zero(ring_.field_degree());
    c[0] = v;
    terms_[Exponents(ring_.variables().size(), 0)] = std::move(c);
  }
}

Scalar Scalar::generator(const CoefficientRing& ring) {
  require(ring.field_degree() > 1, errc::bad_scalar,
          "the rationals have no field generator");
  Scalar s;
  s.ring_ = ring;
  Coeff c = coeff_zero(ring.field_degree());
  c[1] = 1;
  s.terms_[Exponents(ring.variables().size(), 0)] = std::move(c);
  return s;
}

Scalar Scalar::variable(const CoefficientRing& ring, const std::string& name) {
  auto& vars = ring.variables();
  auto it = std::find(vars.begin(), vars.end(), name);
  require(it != vars.end(), errc::bad_scalar, "unknown variable '" + name + "'");
  Scalar s;
  s.ring_ = ring;
  Exponents e(vars.size(), 0);
  e[static_cast<std::size_t>(it - vars.begin())] = 1;
  Coeff c = coeff_zero(ring.field_degree());
  c[0] = 1;
  s.terms_[std::move(e)] = std::move(c);
  return s;
}

Scalar Scalar::from_field_coords(const CoefficientRing& ring, std::vector<Rat> coords) {
  require(coords.size() == ring.field_degree(), errc::wrong_dimension,
          "field coordinate vector has the wrong length");
  Scalar s;
  s.ring_ = ring;
  if (!coeff_is_zero(coords)) s.terms_[Exponents(ring.variables().size(), 0)] = std::move(coords);
  return s;
}

bool Scalar::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

bool Scalar::is_rational() const {
  if (!is_constant()) return false;
  if (terms_.empty()) return true;
  auto& c = terms_.begin()->second;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

bool Scalar::is_integer() const { return is_rational() && rat_is_integer(as_rational()); }

Rat Scalar::as_rational() const {
  require(is_rational(), errc::bad_scalar, "scalar is not rational: " + str());
  return terms_.empty() ? Rat(0) : terms_.begin()->second[0];
}

Int Scalar::as_integer() const {
  Rat r = as_rational();
  require(rat_is_integer(r), errc::not_integral, "scalar is not an integer: " + str());
  return numerator(r);
}

std::vector<Rat> Scalar::constant_coords() const {
  require(is_constant(), errc::bad_scalar, "scalar is not constant: " + str());
  if (terms_.empty()) return coeff_zero(ring_.field_degree());
  return terms_.begin()->second;
}

void Scalar::insert_term(const Exponents& e, Coeff c) {
  if (coeff_is_zero(c)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, std::move(c));
  } else {
    it->second = coeff_add(it->second, c);
    if (coeff_is_zero(it->second)) terms_.erase(it);
  }
}

void Scalar::check_same_ring(const Scalar& a, const Scalar& b) {
  require(a.ring_ == b.ring_, errc::ring_mismatch,
          "scalars live in different rings: " + a.ring_.describe() + " vs " +
              b.ring_.describe());
}

std::pair<Scalar, Scalar> coerce(const Scalar& a, const Scalar& b) {
  if (a.ring() == b.ring()) return {a, b};
  auto promotable = [](const CoefficientRing& from, const CoefficientRing& to) {
    if (from.is_rationals()) return true;
    return !from.is_family() && to.is_family() && to.base_field() == from;
  };
  if (promotable(a.ring(), b.ring())) return {a.promoted(b.ring()), b};
  if (promotable(b.ring(), a.ring())) return {a, b.promoted(a.ring())};
  fail(errc::ring_mismatch, "scalars live in incompatible rings: " + a.ring().describe() +
                                " vs " + b.ring().describe());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [e, c] : r.terms_) c = coeff_neg(c);
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (ring_ != o.ring_) {
    auto [x, y] = coerce(*this, o);
    *this = std::move(x);
    return *this += y;
  }
  for (auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second = coeff_add(it->second, c);
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (ring_ != o.ring_) {
    auto [x, y] = coerce(*this, o);
    *this = std::move(x);
    return *this *= y;
  }
  std::map<Exponents, Coeff> out;
  for (auto& [e1, c1] : terms_) {
    for (auto& [e2, c2] : o.terms_) {
      Exponents e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      Coeff c = coeff_mul(c1, c2, ring_.min_poly());
      auto it = out.find(e);
      if (it == out.end()) {
        if (!coeff_is_zero(c)) out.emplace(std::move(e), std::move(c));
      } else {
        it->second = coeff_add(it->second, c);
        if (coeff_is_zero(it->second)) out.erase(it);
      }
    }
  }
  terms_ = std::move(out);
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  if (ring_ != o.ring_) {
    auto [x, y] = coerce(*this, o);
    return x == y;
  }
  return terms_ == o.terms_;
}

bool Scalar::sort_key_less(const Scalar& o) const {
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    for (std::size_t i = 0; i < it->second.size() && i < jt->second.size(); ++i)
      if (it->second[i] != jt->second[i]) return it->second[i] < jt->second[i];
    if (it->second.size() != jt->second.size()) return it->second.size() < jt->second.size();
  }
  return jt != o.terms_.end();
}

bool Scalar::is_unit() const { return is_constant() && !is_zero(); }

Scalar Scalar::inverse() const {
  require(!is_zero(), errc::division_by_zero, "division by zero");
  require(is_constant(), errc::not_invertible,
          "scalar is not invertible in its ring: " + str());
  Scalar r;
  r.ring_ = ring_;
  r.terms_[terms_.begin()->first] = coeff_inverse(terms_.begin()->second, ring_.min_poly());
  return r;
}

Scalar Scalar::pow(long long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar acc(ring_, Rat(1));
  Scalar base = *this;
  unsigned long long e = static_cast<unsigned long long>(k);
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

Scalar Scalar::specialize(const std::map<std::string, Scalar>& values) const {
  if (!ring_.is_family()) return *this;
  CoefficientRing base = ring_.base_field();
  auto& vars = ring_.variables();
  std::vector<Scalar> subs;
  subs.reserve(vars.size());
  for (auto& v : vars) {
    auto it = values.find(v);
    require(it != values.end(), errc::unbound_variable,
            "no value given for variable '" + v + "'");
    Scalar val = it->second;
    if (val.ring() != base) {
      require(val.ring().is_rationals(), errc::ring_mismatch,
              "specialization value for '" + v + "' lives in the wrong ring");
      val = val.promoted(base);
    }
    require(val.is_constant(), errc::bad_scalar,
            "specialization value for '" + v + "' must be a field element");
    subs.push_back(std::move(val));
  }
  Scalar out(base, Rat(0));
  for (auto& [e, c] : terms_) {
    Scalar term = Scalar::from_field_coords(base, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term *= subs[i].pow(e[i]);
    out += term;
  }
  return out;
}

Scalar Scalar::promoted(const CoefficientRing& target) const {
  if (ring_ == target) return *this;
  if (ring_.is_rationals()) {
    Scalar out(target, Rat(0));
    if (!terms_.empty()) {
      Coeff c = coeff_zero(target.field_degree());
      c[0] = terms_.begin()->second[0];
      out.terms_[Exponents(target.variables().size(), 0)] = std::move(c);
    }
    return out;
  }
  if (!ring_.is_family() && target.is_family() && target.base_field() == ring_) {
    Scalar out;
    out.ring_ = target;
    Exponents zero(target.variables().size(), 0);
    for (auto& [e, c] : terms_) out.terms_[zero] = c;  // constants only: e is empty
    return out;
  }
  fail(errc::ring_mismatch,
       "cannot embed " + ring_.describe() + " into " + target.describe());
}

// --- text form ------------------------------------------------------------

namespace {

struct FieldText {
  std::string body;  // without the leading sign
  bool negative = false;
  bool composite = false;  // more than one power-basis monomial
  bool is_one = false;
};

FieldText render_field(const Coeff& c, const std::string& gen) {
  FieldText out;
  std::size_t h = c.size();
  for (std::size_t i = c.size(); i-- > 0;)
    if (c[i] != 0) {
      h = i;
      break;
    }
  out.negative = c[h] < 0;
  int pieces = 0;
  std::string body;
  for (std::size_t i = h + 1; i-- > 0;) {
    if (c[i] == 0) continue;
    Rat r = out.negative ? Rat(-c[i]) : c[i];
    bool neg = r < 0;
    if (neg) r = -r;
    std::string mono;
    if (i == 0) {
      mono = show_rat(r);
    } else {
      if (r != 1) mono = show_rat(r) + "*";
      mono += gen;
      if (i > 1) mono += "^" + std::to_string(i);
    }
    if (pieces == 0)
      body = mono;
    else
      body += (neg ? " - " : " + ") + mono;
    ++pieces;
  }
  out.body = body;
  out.composite = pieces > 1;
  out.is_one = !out.negative && !out.composite && h == 0 && c[0] == 1;
  return out;
}

}  // namespace

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  auto& vars = ring_.variables();
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    FieldText f = render_field(it->second, ring_.generator_name());
    std::string varpart;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      if (!varpart.empty()) varpart += "*";
      varpart += vars[i];
      if (it->first[i] > 1) varpart += "^" + std::to_string(it->first[i]);
    }
    std::string body;
    if (varpart.empty())
      body = f.body;
    else if (f.is_one)
      body = varpart;
    else if (f.composite)
      body = "(" + f.body + ")*" + varpart;
    else
      body = f.body + "*" + varpart;
    if (first) {
      out = (f.negative ? "-" : "") + body;
      first = false;
    } else {
      out += (f.negative ? " - " : " + ") + body;
    }
  }
  return out;
}

// --- parsing ----------------------------------------------------------------

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  Rat number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    require(pos > start, errc::bad_scalar, "expected a number in '" + s + "'");
    std::string num = s.substr(start, pos - start);
    if (pos < s.size() && s[pos] == '/' && pos + 1 < s.size() &&
        std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
      ++pos;
      std::size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return parse_rat(num + "/" + s.substr(dstart, pos - dstart));
    }
    return parse_rat(num);
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
};

struct Parser {
  Lexer lex;
  const CoefficientRing& ring;

  Scalar expr() {
    bool neg = false;
    if (lex.eat('-'))
      neg = true;
    else
      lex.eat('+');
    Scalar acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (lex.eat('+'))
        acc += term();
      else if (lex.eat('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Scalar term() {
    Scalar acc = factor();
    while (lex.eat('*')) acc *= factor();
    return acc;
  }

  Scalar factor() {
    Scalar b = base();
    if (lex.eat('^')) {
      Rat e = lex.number();
      require(rat_is_integer(e) && e >= 0, errc::bad_scalar,
              "exponents must be non-negative integers");
      require(numerator(e) <= 4096, errc::bad_scalar, "exponent too large");
      b = b.pow(static_cast<long long>(numerator(e).convert_to<long long>()));
    }
    return b;
  }

  Scalar base() {
    char c = lex.peek();
    if (c == '(') {
      lex.eat('(');
      Scalar inner = expr();
      require(lex.eat(')'), errc::bad_scalar, "missing ')'");
      return inner;
    }
    if (c == '-') {  // unary minus inside a product
      lex.eat('-');
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(ring, lex.number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = lex.ident();
      if (name == ring.generator_name()) return Scalar::generator(ring);
      if (ring.has_variable(name)) return Scalar::variable(ring, name);
      fail(errc::bad_scalar, "unknown symbol '" + name + "' in scalar expression");
    }
    fail(errc::bad_scalar, "unexpected character in scalar expression");
  }
};

}  // namespace

Scalar Scalar::parse(const CoefficientRing& ring, const std::string& text) {
  Parser p{Lexer{text}, ring};
  Scalar v = p.expr();
  p.lex.skip_ws();
  require(p.lex.pos == text.size(), errc::bad_scalar,
          "trailing characters in scalar expression '" + text + "'");
  return v;
}

// --- vector helpers ---------------------------------------------------------

ScalarVec to_scalars(const RatVec& v, const CoefficientRing& ring) {
  ScalarVec r;
  r.reserve(v.size());
  for (auto& x : v) r.emplace_back(ring, x);
  return r;
}

ScalarVec promote_vec(const ScalarVec& v, const CoefficientRing& target) {
  ScalarVec r;
  r.reserve(v.size());
  for (auto& x : v) r.push_back(x.promoted(target));
  return r;
}

ScalarVec apply_int_matrix(const IntMat& m, const ScalarVec& v) {
  ScalarVec r;
  r.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    require(m[i].size() == v.size(), errc::wrong_dimension, "matrix/vector shape mismatch");
    Scalar acc = v.empty() ? Scalar() : Scalar(v[0].ring(), Rat(0));
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0) acc += Scalar(v[j].ring(), Rat(m[i][j])) * v[j];
    r.push_back(std::move(acc));
  }
  return r;
}

ScalarVec scalar_vec_add(const ScalarVec& a, const ScalarVec& b) {
  require(a.size() == b.size(), errc::wrong_dimension, "vector sum shape mismatch");
  ScalarVec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

ScalarVec scalar_vec_sub(const ScalarVec& a, const ScalarVec& b) {
  require(a.size() == b.size(), errc::wrong_dimension, "vector difference shape mismatch");
  ScalarVec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

bool scalar_vec_eq(const ScalarVec& a, const ScalarVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// --- square roots -----------------------------------------------------------

std::optional<Scalar> sqrt_in_field(const Scalar& s) {
  if (!s.is_constant()) return std::nullopt;
  const CoefficientRing ring = s.ring();
  const CoefficientRing field = ring.base_field();
  std::vector<Rat> c = s.constant_coords();
  if (s.is_rational()) {
    auto r = rat_sqrt_exact(s.as_rational());
    if (r) return Scalar(ring, *r);
    if (field.field_degree() != 2) return std::nullopt;
    // fall through: a rational may still be a square inside a quadratic field
  }
  if (field.field_degree() != 2) return std::nullopt;
  // x^2 + p x + q = 0 with x = A + B a; a^2 = -m1 a - m0.
  const RatPoly& m = field.min_poly();
  Rat m0 = m[0], m1 = m[1];
  Rat a = c[0], b = c[1];
  // want (u + v a)^2 = a + b a: u^2 - m0 v^2 = A and v (2u - m1 v) = B
  auto finish = [&](const Rat& u, const Rat& v) -> std::optional<Scalar> {
    Rat lhs0 = u * u - m0 * v * v;
    Rat lhs1 = Rat(2) * u * v - m1 * v * v;
    if (lhs0 == a && lhs1 == b) {
      Scalar root = Scalar::from_field_coords(field, {u, v});
      if (ring.is_family()) root = root.promoted(ring);
      return root;
    }
    return std::nullopt;
  };
  if (b == 0) {
    if (auto u = rat_sqrt_exact(a)) {
      if (auto r = finish(*u, Rat(0))) return r;
    }
    // v != 0 branch with 2u = m1 v
    Rat denom = m1 * m1 / Rat(4) - m0;
    if (denom != 0) {
      Rat v2 = a / denom;
      if (auto v = rat_sqrt_exact(v2)) {
        for (const Rat& vv : {*v, Rat(-*v)}) {
          if (auto r = finish(m1 * vv / Rat(2), vv)) return r;
        }
      }
    }
    return std::nullopt;
  }
  // v != 0; u = (B + m1 v^2) / (2 v); substitute into u^2 - m0 v^2 = A:
  // (m1^2 - 4 m0) t^2 + (2 B m1 - 4 A) t + B^2 = 0 with t = v^2.
  Rat qa = m1 * m1 - Rat(4) * m0;
  Rat qb = Rat(2) * b * m1 - Rat(4) * a;
  Rat qc = b * b;
  std::vector<Rat> tcands;
  if (qa == 0) {
    if (qb != 0) tcands.push_back(-qc / qb);
  } else {
    Rat disc = qb * qb - Rat(4) * qa * qc;
    if (auto sd = rat_sqrt_exact(disc)) {
      tcands.push_back((-qb + *sd) / (Rat(2) * qa));
      tcands.push_back((-qb - *sd) / (Rat(2) * qa));
    }
  }
  for (const Rat& t : tcands) {
    if (t <= 0) continue;
    if (auto v = rat_sqrt_exact(t)) {
      for (const Rat& vv : {*v, Rat(-*v)}) {
        if (vv == 0) continue;
        Rat u = (b + m1 * vv * vv) / (Rat(2) * vv);
        if (auto r = finish(u, vv)) return r;
      }
    }
  }
  return std::nullopt;
}

}  // namespace infchar
