#include "stsp/ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>

namespace stsp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotIsotropicPair: return "NotIsotropicPair";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::GuardViolated: return "GuardViolated";
    case ErrorCode::NoColumnWitness: return "NoColumnWitness";
    case ErrorCode::DivisibilityFailure: return "DivisibilityFailure";
    case ErrorCode::LiftFailure: return "LiftFailure";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotComaximal: return "NotComaximal";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

namespace {

using detail::Fraction;
using detail::MixedPair;
using detail::Payload;
using detail::PolyTerm;

const mpz_class& as_mpz(const RingValue& x) { return std::get<mpz_class>(x.payload()); }

// Descending lexicographic order on exponent vectors; leading term first.
bool monomial_greater(const Monomial& a, const Monomial& b) { return a > b; }

bool compound(const Ring& ring) {
  return ring.kind() != RingKind::Integer && ring.kind() != RingKind::IntegerMod;
}

std::string wrap(const std::string& s) { return "(" + s + ")"; }

// A token that binds tighter than any operator we print.
bool simple(const std::string& s) { return s.find_first_of(" +-*/^") == std::string::npos; }

}  // namespace

// ---------------------------------------------------------------------------
// RingValue

void require_same_ring(const RingValue& x, const RingValue& y) {
  if (!x.valid() || !y.valid()) raise(ErrorCode::DescriptorMismatch, "uninitialised ring value");
  if (x.ring() != y.ring())
    raise(ErrorCode::DescriptorMismatch, x.ring()->spec() + " vs " + y.ring()->spec());
}

void require_ring(const RingValue& x, const RingPtr& ring) {
  if (!x.valid() || x.ring() != ring)
    raise(ErrorCode::DescriptorMismatch,
          (x.valid() ? x.ring()->spec() : std::string("<invalid>")) + " vs " + ring->spec());
}

RingValue RingValue::operator+(const RingValue& other) const {
  require_same_ring(*this, other);
  return ring_->add(*this, other);
}

RingValue RingValue::operator-(const RingValue& other) const {
  require_same_ring(*this, other);
  return ring_->add(*this, ring_->negate(other));
}

RingValue RingValue::operator*(const RingValue& other) const {
  require_same_ring(*this, other);
  return ring_->multiply(*this, other);
}

RingValue RingValue::operator-() const { return ring_->negate(*this); }

RingValue RingValue::operator*(long k) const { return *this * ring_->from_integer(k); }
RingValue RingValue::operator+(long k) const { return *this + ring_->from_integer(k); }

RingValue RingValue::pow(unsigned e) const {
  RingValue result = ring_->one();
  RingValue base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool RingValue::is_zero() const { return ring_->is_zero(*this); }
bool RingValue::is_one() const { return ring_->equal(*this, ring_->one()); }
std::string RingValue::str() const { return ring_->format(*this); }

bool operator==(const RingValue& x, const RingValue& y) {
  require_same_ring(x, y);
  return x.ring()->equal(x, y);
}

// ---------------------------------------------------------------------------
// Ring

RingValue Ring::make(Payload payload) const {
  return RingValue(ptr(), std::make_shared<const Payload>(std::move(payload)));
}

void Ring::check_owned(const RingValue& x) const {
  if (!x.valid() || x.ring().get() != this)
    raise(ErrorCode::DescriptorMismatch,
          (x.valid() ? x.ring()->spec() : std::string("<invalid>")) + " vs " + spec());
}

const mpz_class& integer_value(const RingValue& x) {
  if (!x.valid() || (x.ring()->kind() != RingKind::Integer && x.ring()->kind() != RingKind::IntegerMod))
    raise(ErrorCode::DescriptorMismatch, "integer payload requested from non-integer ring");
  return as_mpz(x);
}

// ---------------------------------------------------------------------------
// Z

IntegerRing::IntegerRing() : Ring("Z") {}
RingValue IntegerRing::zero() const { return make(mpz_class(0)); }
RingValue IntegerRing::one() const { return make(mpz_class(1)); }
RingValue IntegerRing::from_integer(const mpz_class& k) const { return make(k); }
RingValue IntegerRing::add(const RingValue& x, const RingValue& y) const {
  return make(mpz_class(as_mpz(x) + as_mpz(y)));
}
RingValue IntegerRing::negate(const RingValue& x) const { return make(mpz_class(-as_mpz(x))); }
RingValue IntegerRing::multiply(const RingValue& x, const RingValue& y) const {
  return make(mpz_class(as_mpz(x) * as_mpz(y)));
}
bool IntegerRing::equal(const RingValue& x, const RingValue& y) const { return as_mpz(x) == as_mpz(y); }
bool IntegerRing::is_zero(const RingValue& x) const { return sgn(as_mpz(x)) == 0; }
std::optional<RingValue> IntegerRing::divide_exact(const RingValue& x, const RingValue& y) const {
  const mpz_class& d = as_mpz(y);
  if (sgn(d) == 0) return std::nullopt;
  if (!mpz_divisible_p(as_mpz(x).get_mpz_t(), d.get_mpz_t())) return std::nullopt;
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), as_mpz(x).get_mpz_t(), d.get_mpz_t());
  return make(q);
}
std::string IntegerRing::format(const RingValue& x) const { return as_mpz(x).get_str(); }

// ---------------------------------------------------------------------------
// Z/m

IntegerModRing::IntegerModRing(mpz_class modulus) : Ring("Z/" + modulus.get_str()), m_(std::move(modulus)) {
  if (m_ < 2) raise(ErrorCode::InvalidDescriptor, "modulus must be at least 2");
}
mpz_class IntegerModRing::reduce(const mpz_class& k) const {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), k.get_mpz_t(), m_.get_mpz_t());
  return r;
}
RingValue IntegerModRing::zero() const { return make(mpz_class(0)); }
RingValue IntegerModRing::one() const { return make(reduce(1)); }
RingValue IntegerModRing::from_integer(const mpz_class& k) const { return make(reduce(k)); }
RingValue IntegerModRing::add(const RingValue& x, const RingValue& y) const {
  return make(reduce(as_mpz(x) + as_mpz(y)));
}
RingValue IntegerModRing::negate(const RingValue& x) const { return make(reduce(-as_mpz(x))); }
RingValue IntegerModRing::multiply(const RingValue& x, const RingValue& y) const {
  return make(reduce(as_mpz(x) * as_mpz(y)));
}
bool IntegerModRing::equal(const RingValue& x, const RingValue& y) const { return as_mpz(x) == as_mpz(y); }
bool IntegerModRing::is_zero(const RingValue& x) const { return sgn(as_mpz(x)) == 0; }
std::optional<RingValue> IntegerModRing::divide_exact(const RingValue& x, const RingValue& y) const {
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), as_mpz(y).get_mpz_t(), m_.get_mpz_t()) == 0) return std::nullopt;
  return make(reduce(as_mpz(x) * inv));
}
std::string IntegerModRing::format(const RingValue& x) const { return as_mpz(x).get_str(); }
bool IntegerModRing::is_domain() const { return mpz_probab_prime_p(m_.get_mpz_t(), 30) > 0; }
bool IntegerModRing::is_non_zero_divisor(const RingValue& x) const {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), as_mpz(x).get_mpz_t(), m_.get_mpz_t());
  return g == 1;
}

// ---------------------------------------------------------------------------
// R[x,...]

PolynomialRing::PolynomialRing(RingPtr base, std::vector<std::string> vars)
    : Ring([&] {
        std::string s = base->spec() + "[";
        for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
        return s + "]";
      }()),
      base_(std::move(base)),
      vars_(std::move(vars)) {
  if (vars_.empty()) raise(ErrorCode::InvalidDescriptor, "polynomial ring needs a variable");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[i] == vars_[j]) raise(ErrorCode::InvalidDescriptor, "repeated variable '" + vars_[i] + "'");
}

const std::vector<PolyTerm>& PolynomialRing::terms(const RingValue& x) const {
  check_owned(x);
  return std::get<std::vector<PolyTerm>>(x.payload());
}

RingValue PolynomialRing::from_terms(std::vector<PolyTerm> terms) const {
  std::sort(terms.begin(), terms.end(),
            [](const PolyTerm& a, const PolyTerm& b) { return monomial_greater(a.exponents, b.exponents); });
  std::vector<PolyTerm> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    require_ring(t.coeff, base_);
    if (t.exponents.size() != vars_.size())
      raise(ErrorCode::DescriptorMismatch, "monomial arity does not match " + spec());
    if (!out.empty() && out.back().exponents == t.exponents) {
      out.back().coeff = out.back().coeff + t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const PolyTerm& t) { return t.coeff.is_zero(); });
  return make(std::move(out));
}

RingValue PolynomialRing::constant(const RingValue& c) const {
  require_ring(c, base_);
  std::vector<PolyTerm> t;
  if (!c.is_zero()) t.push_back({Monomial(vars_.size(), 0), c});
  return make(std::move(t));
}

RingValue PolynomialRing::monomial(const RingValue& c, Monomial exponents) const {
  return from_terms({PolyTerm{std::move(exponents), c}});
}

RingValue PolynomialRing::zero() const { return make(std::vector<PolyTerm>{}); }
RingValue PolynomialRing::one() const { return constant(base_->one()); }
RingValue PolynomialRing::from_integer(const mpz_class& k) const { return constant(base_->from_integer(k)); }

RingValue PolynomialRing::add(const RingValue& x, const RingValue& y) const {
  const auto& a = terms(x);
  const auto& b = terms(y);
  std::vector<PolyTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && monomial_greater(a[i].exponents, b[j].exponents))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || monomial_greater(b[j].exponents, a[i].exponents)) {
      out.push_back(b[j++]);
    } else {
      RingValue c = a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  return make(std::move(out));
}

RingValue PolynomialRing::negate(const RingValue& x) const {
  std::vector<PolyTerm> out = terms(x);
  for (auto& t : out) t.coeff = -t.coeff;
  return make(std::move(out));
}

RingValue PolynomialRing::multiply(const RingValue& x, const RingValue& y) const {
  const auto& a = terms(x);
  const auto& b = terms(y);
  if (a.empty() || b.empty()) return zero();
  std::map<Monomial, RingValue, std::greater<>> acc;
  for (const auto& s : a) {
    for (const auto& t : b) {
      Monomial e(vars_.size());
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = s.exponents[v] + t.exponents[v];
      RingValue c = s.coeff * t.coeff;
      auto [it, inserted] = acc.try_emplace(std::move(e), c);
      if (!inserted) it->second = it->second + c;
    }
  }
  std::vector<PolyTerm> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) out.push_back({e, c});
  return make(std::move(out));
}

bool PolynomialRing::equal(const RingValue& x, const RingValue& y) const {
  const auto& a = terms(x);
  const auto& b = terms(y);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].exponents != b[i].exponents || !(a[i].coeff == b[i].coeff)) return false;
  return true;
}

bool PolynomialRing::is_zero(const RingValue& x) const { return terms(x).empty(); }

std::optional<RingValue> PolynomialRing::divide_exact(const RingValue& x, const RingValue& y) const {
  const auto& d = terms(y);
  if (d.empty()) return std::nullopt;
  if (d.size() == 1 && std::all_of(d[0].exponents.begin(), d[0].exponents.end(), [](auto e) { return e == 0; })) {
    std::vector<PolyTerm> out;
    for (const auto& t : terms(x)) {
      auto q = base_->divide_exact(t.coeff, d[0].coeff);
      if (!q) return std::nullopt;
      out.push_back({t.exponents, *q});
    }
    return from_terms(std::move(out));
  }
  // Leading-term division in lex order; exact over domains.
  RingValue rem = x;
  std::vector<PolyTerm> quotient;
  const PolyTerm& lead = d.front();
  while (!is_zero(rem)) {
    const PolyTerm& r = terms(rem).front();
    Monomial e(vars_.size());
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (r.exponents[v] < lead.exponents[v]) return std::nullopt;
      e[v] = r.exponents[v] - lead.exponents[v];
    }
    auto c = base_->divide_exact(r.coeff, lead.coeff);
    if (!c) return std::nullopt;
    RingValue step = monomial(*c, e);
    quotient.push_back({std::move(e), *c});
    rem = rem - step * y;
  }
  return from_terms(std::move(quotient));
}

std::string PolynomialRing::format(const RingValue& x) const {
  const auto& ts = terms(x);
  if (ts.empty()) return "0";
  const bool wrap_coeff = compound(*base_);
  std::string out;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const auto& t = ts[k];
    std::string mono;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      if (t.exponents[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[v];
      if (t.exponents[v] > 1) mono += "^" + std::to_string(t.exponents[v]);
    }
    std::string c = base_->format(t.coeff);
    bool negative = false;
    if (!c.empty() && c[0] == '-' && simple(c.substr(1))) {
      negative = true;
      c = c.substr(1);
    }
    const bool paren = wrap_coeff && !simple(c);
    std::string body;
    if (mono.empty()) {
      body = paren ? wrap(c) : c;
    } else if (c == "1") {
      body = mono;
    } else {
      body = (paren ? wrap(c) : c) + "*" + mono;
    }
    if (k == 0) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

std::optional<RingValue> PolynomialRing::variable(std::string_view name) const {
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    if (vars_[v] == name) {
      Monomial e(vars_.size(), 0);
      e[v] = 1;
      return monomial(base_->one(), std::move(e));
    }
  }
  if (auto b = base_->variable(name)) return constant(*b);
  return std::nullopt;
}

bool PolynomialRing::is_non_zero_divisor(const RingValue& x) const {
  if (is_zero(x)) return false;
  if (base_->is_domain()) return true;
  if (base_->kind() == RingKind::IntegerMod) {
    // McCoy: f kills nothing iff the content is coprime to m.
    mpz_class g = as_integer_mod(*base_).modulus();
    for (const auto& t : terms(x)) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), as_mpz(t.coeff).get_mpz_t());
    return g == 1;
  }
  return false;
}

RingValue PolynomialRing::constant_term(const RingValue& x) const {
  const auto& ts = terms(x);
  if (!ts.empty() && std::all_of(ts.back().exponents.begin(), ts.back().exponents.end(), [](auto e) { return e == 0; }))
    return ts.back().coeff;
  return base_->zero();
}

unsigned PolynomialRing::degree(const RingValue& x, std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms(x)) d = std::max<unsigned>(d, t.exponents.at(var));
  return d;
}

// ---------------------------------------------------------------------------
// Loc(R, a)

LocalizedRing::LocalizedRing(RingPtr base, RingValue a)
    : Ring("Loc(" + base->spec() + "," + a.str() + ")"), base_(std::move(base)), a_(std::move(a)) {
  require_ring(a_, base_);
  if (!base_->is_non_zero_divisor(a_))
    raise(ErrorCode::InvalidDescriptor, "localisation element " + a_.str() + " is not a certified non-zero-divisor of " +
                                            base_->spec());
}

const Fraction& LocalizedRing::parts(const RingValue& x) const {
  check_owned(x);
  return std::get<Fraction>(x.payload());
}

RingValue LocalizedRing::fraction(const RingValue& num, unsigned k) const {
  require_ring(num, base_);
  if (num.is_zero()) return make(Fraction{num, 0});
  RingValue n = num;
  while (k > 0) {
    auto q = base_->divide_exact(n, a_);
    if (!q) break;
    n = *q;
    --k;
  }
  return make(Fraction{std::move(n), k});
}

RingValue LocalizedRing::zero() const { return make(Fraction{base_->zero(), 0}); }
RingValue LocalizedRing::one() const { return make(Fraction{base_->one(), 0}); }
RingValue LocalizedRing::from_integer(const mpz_class& k) const { return fraction(base_->from_integer(k), 0); }

RingValue LocalizedRing::add(const RingValue& x, const RingValue& y) const {
  const auto& p = parts(x);
  const auto& q = parts(y);
  const unsigned k = std::max(p.k, q.k);
  RingValue num = p.num * a_.pow(k - p.k) + q.num * a_.pow(k - q.k);
  return fraction(num, k);
}

RingValue LocalizedRing::negate(const RingValue& x) const {
  const auto& p = parts(x);
  return make(Fraction{-p.num, p.k});
}

RingValue LocalizedRing::multiply(const RingValue& x, const RingValue& y) const {
  const auto& p = parts(x);
  const auto& q = parts(y);
  return fraction(p.num * q.num, p.k + q.k);
}

bool LocalizedRing::equal(const RingValue& x, const RingValue& y) const {
  const auto& p = parts(x);
  const auto& q = parts(y);
  return p.k == q.k && p.num == q.num;
}

bool LocalizedRing::is_zero(const RingValue& x) const { return parts(x).num.is_zero(); }

std::optional<RingValue> LocalizedRing::divide_exact(const RingValue& x, const RingValue& y) const {
  const auto& p = parts(x);
  const auto& q = parts(y);
  if (q.num.is_zero()) return std::nullopt;
  // Strip powers of a from the divisor's numerator; they are units here.
  RingValue d = q.num;
  unsigned stripped = 0;
  while (!d.is_one()) {
    auto s = base_->divide_exact(d, a_);
    if (!s) break;
    d = *s;
    ++stripped;
  }
  auto z = base_->divide_exact(p.num, d);
  if (!z) return std::nullopt;
  // x/y = (p.num/d) * a^(q.k) / a^(p.k + stripped)
  return fraction(*z * a_.pow(q.k), p.k + stripped);
}

std::string LocalizedRing::format(const RingValue& x) const {
  const auto& p = parts(x);
  std::string num = base_->format(p.num);
  if (p.k == 0) return num;
  std::string den = base_->format(a_.pow(p.k));
  if (compound(*base_)) return wrap(num) + "/" + wrap(den);
  return num + "/" + den;
}

std::optional<RingValue> LocalizedRing::variable(std::string_view name) const {
  if (auto b = base_->variable(name)) return fraction(*b, 0);
  return std::nullopt;
}

bool LocalizedRing::is_non_zero_divisor(const RingValue& x) const {
  return base_->is_non_zero_divisor(parts(x).num);
}

// ---------------------------------------------------------------------------
// B(R, a)

MixedRing::MixedRing(RingPtr base, RingValue a, std::string var)
    : Ring("B(" + base->spec() + "," + a.str() + (var == "t" ? std::string() : "," + var) + ")"),
      base_(std::move(base)),
      a_(std::move(a)),
      var_(std::move(var)) {
  if (base_->variable(var_))
    raise(ErrorCode::InvalidDescriptor, "variable '" + var_ + "' of B already names a generator of " + base_->spec());
  loc_ = localized(base_, a_);
  ambient_ = polynomials(loc_, {var_});
}

const MixedPair& MixedRing::parts(const RingValue& x) const {
  check_owned(x);
  return std::get<MixedPair>(x.payload());
}

RingValue MixedRing::pair(const RingValue& r, const RingValue& f) const {
  require_ring(r, base_);
  require_ring(f, ambient_);
  if (!as_polynomial(*ambient_).constant_term(f).is_zero())
    raise(ErrorCode::PreconditionViolated, "second component of a B-element must have zero constant term");
  return make(MixedPair{r, f});
}

RingValue MixedRing::embed(const RingValue& x) const {
  const auto& p = parts(x);
  const auto& amb = as_polynomial(*ambient_);
  return amb.constant(as_localized(*loc_).fraction(p.r, 0)) + p.f;
}

std::optional<RingValue> MixedRing::from_ambient(const RingValue& p) const {
  const auto& amb = as_polynomial(*ambient_);
  RingValue c = amb.constant_term(p);
  const auto& fr = as_localized(*loc_).parts(c);
  if (fr.k != 0) return std::nullopt;
  return make(MixedPair{fr.num, p - amb.constant(c)});
}

bool MixedRing::in_ideal(const RingValue& x) const { return parts(x).r.is_zero(); }

RingValue MixedRing::zero() const { return make(MixedPair{base_->zero(), ambient_->zero()}); }
RingValue MixedRing::one() const { return make(MixedPair{base_->one(), ambient_->zero()}); }
RingValue MixedRing::from_integer(const mpz_class& k) const {
  return make(MixedPair{base_->from_integer(k), ambient_->zero()});
}

RingValue MixedRing::add(const RingValue& x, const RingValue& y) const {
  const auto& p = parts(x);
  const auto& q = parts(y);
  return make(MixedPair{p.r + q.r, p.f + q.f});
}

RingValue MixedRing::negate(const RingValue& x) const {
  const auto& p = parts(x);
  return make(MixedPair{-p.r, -p.f});
}

RingValue MixedRing::multiply(const RingValue& x, const RingValue& y) const {
  // (r, f)(s, g) = (rs, l(r)g + f l(s) + fg)
  const auto& p = parts(x);
  const auto& q = parts(y);
  const auto& amb = as_polynomial(*ambient_);
  const auto& loc = as_localized(*loc_);
  RingValue lr = amb.constant(loc.fraction(p.r, 0));
  RingValue ls = amb.constant(loc.fraction(q.r, 0));
  return make(MixedPair{p.r * q.r, lr * q.f + p.f * ls + p.f * q.f});
}

bool MixedRing::equal(const RingValue& x, const RingValue& y) const {
  const auto& p = parts(x);
  const auto& q = parts(y);
  return p.r == q.r && p.f == q.f;
}

bool MixedRing::is_zero(const RingValue& x) const {
  const auto& p = parts(x);
  return p.r.is_zero() && p.f.is_zero();
}

std::optional<RingValue> MixedRing::divide_exact(const RingValue& x, const RingValue& y) const {
  auto q = ambient_->divide_exact(embed(x), embed(y));
  if (!q) return std::nullopt;
  return from_ambient(*q);
}

std::string MixedRing::format(const RingValue& x) const { return ambient_->format(embed(x)); }

std::optional<RingValue> MixedRing::variable(std::string_view name) const {
  if (name == var_) return make(MixedPair{base_->zero(), *ambient_->variable(name)});
  if (auto b = base_->variable(name)) return make(MixedPair{*b, ambient_->zero()});
  return std::nullopt;
}

bool MixedRing::is_non_zero_divisor(const RingValue& x) const {
  if (is_domain()) return !is_zero(x);
  // (r, 0) with r a non-zero-divisor of R is one: (r,0)(s,g) = (rs, l(r)g).
  const auto& p = parts(x);
  return p.f.is_zero() && base_->is_non_zero_divisor(p.r);
}

// ---------------------------------------------------------------------------
// Interning

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::unordered_map<std::string, RingPtr>& registry() {
  static std::unordered_map<std::string, RingPtr> r;
  return r;
}

template <class Make>
RingPtr intern(const std::string& key, Make&& make_ring) {
  {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find(key);
    if (it != registry().end()) return it->second;
  }
  // Construction may recursively intern (B builds Loc and R_a[t]); do it unlocked.
  RingPtr fresh = make_ring();
  std::lock_guard lock(registry_mutex());
  auto [it, inserted] = registry().try_emplace(fresh->spec(), fresh);
  return it->second;
}

}  // namespace

RingPtr integers() {
  static const RingPtr z = intern("Z", [] { return std::make_shared<const IntegerRing>(); });
  return z;
}

RingPtr integers_mod(const mpz_class& m) {
  return intern("Z/" + m.get_str(), [&] { return std::make_shared<const IntegerModRing>(m); });
}

RingPtr polynomials(const RingPtr& base, std::vector<std::string> vars) {
  std::string key = base->spec() + "[";
  for (std::size_t i = 0; i < vars.size(); ++i) key += (i ? "," : "") + vars[i];
  key += "]";
  return intern(key, [&] { return std::make_shared<const PolynomialRing>(base, std::move(vars)); });
}

RingPtr localized(const RingPtr& base, const RingValue& a) {
  require_ring(a, base);
  return intern("Loc(" + base->spec() + "," + a.str() + ")",
                [&] { return std::make_shared<const LocalizedRing>(base, a); });
}

RingPtr mixed(const RingPtr& base, const RingValue& a, const std::string& var) {
  require_ring(a, base);
  return intern("B(" + base->spec() + "," + a.str() + (var == "t" ? std::string() : "," + var) + ")",
                [&] { return std::make_shared<const MixedRing>(base, a, var); });
}

template <class T>
static const T& downcast(const Ring& r, RingKind kind, const char* what) {
  if (r.kind() != kind) raise(ErrorCode::DescriptorMismatch, r.spec() + " is not " + what);
  return static_cast<const T&>(r);
}

const IntegerModRing& as_integer_mod(const Ring& r) {
  return downcast<IntegerModRing>(r, RingKind::IntegerMod, "Z/m");
}
const PolynomialRing& as_polynomial(const Ring& r) {
  return downcast<PolynomialRing>(r, RingKind::Polynomial, "a polynomial ring");
}
const LocalizedRing& as_localized(const Ring& r) {
  return downcast<LocalizedRing>(r, RingKind::Localized, "a localisation");
}
const MixedRing& as_mixed(const Ring& r) { return downcast<MixedRing>(r, RingKind::Mixed, "a mixed ring B"); }

}  // namespace stsp
