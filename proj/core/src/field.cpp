#include "lagrel/field.hpp"

#include <cctype>
#include <utility>

namespace lagrel {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::mixed_fields: return "mixed fields";
    case Errc::division_by_zero: return "division by zero";
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::arity_mismatch: return "arity mismatch";
    case Errc::unknown_generator: return "unknown generator";
    case Errc::index_out_of_range: return "index out of range";
    case Errc::equal_indices: return "equal indices";
    case Errc::field_not_prime: return "field not prime";
    case Errc::not_lagrangian: return "not lagrangian";
    case Errc::rank_deficient: return "rank deficient";
    case Errc::euler_identity_failed: return "euler identity failed";
    case Errc::even_or_non_prime: return "even or non-prime modulus";
    case Errc::circuit_too_large: return "circuit too large";
    case Errc::non_stabilizer_gate: return "non-stabilizer gate";
    case Errc::state_not_stabilizer: return "state not stabilizer";
    case Errc::correspondence_violation: return "correspondence violation";
    case Errc::negative_value: return "negative value";
    case Errc::dangling_node: return "dangling node";
    case Errc::parse_error: return "parse error";
    case Errc::io_error: return "io error";
    case Errc::invalid_argument: return "invalid argument";
  }
  return "unknown error";
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin; this witness set decides 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero");
  // Extended Euclid on signed 128-bit intermediates.
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::fp(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw Error(Errc::field_not_prime,
                "modulus " + std::to_string(p) + " is not prime");
  }
  return Field(FieldKind::prime, p);
}

Field Field::qx() { return Field(FieldKind::rational_function, 0); }

std::uint64_t Field::modulus() const {
  if (kind_ != FieldKind::prime) {
    throw Error(Errc::invalid_argument, "field has no prime modulus");
  }
  return p_;
}

std::string Field::str() const {
  return kind_ == FieldKind::prime ? "Fp " + std::to_string(p_) : "Qx";
}

Poly::Poly(BigInt constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

Poly Poly::x() {
  Poly p;
  p.c_ = {BigInt(0), BigInt(1)};
  return p;
}

Poly Poly::from_coeffs(std::vector<BigInt> low_to_high) {
  Poly p;
  p.c_ = std::move(low_to_high);
  p.trim();
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), BigInt(0));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(i) + o.coeff(i);
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  Poly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

BigInt Poly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) g = boost::multiprecision::gcd(g, c);
  return boost::multiprecision::abs(g);
}

Poly Poly::primitive_part() const {
  if (is_zero()) return Poly();
  BigInt ct = content();
  Poly r = *this;
  for (auto& c : r.c_) c /= ct;
  return r;
}

Poly Poly::with_positive_lead() const {
  if (!is_zero() && lead() < 0) return -*this;
  return *this;
}

namespace {

// Multiplies by x^d.
Poly shift(const Poly& p, int d) {
  std::vector<BigInt> c(static_cast<std::size_t>(d), BigInt(0));
  for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(i));
  return Poly::from_coeffs(std::move(c));
}

// Pseudo-remainder: repeatedly cancels the leading term, scaling by the
// divisor's leading coefficient, so everything stays integral.
Poly prem(Poly r, const Poly& b) {
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int d = r.degree() - b.degree();
    r = r * Poly(b.lead()) - shift(b, d) * Poly(r.lead());
  }
  return r;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.with_positive_lead();
  if (b.is_zero()) return a.with_positive_lead();
  BigInt cg = boost::multiprecision::gcd(a.content(), b.content());
  Poly pa = a.primitive_part();
  Poly pb = b.primitive_part();
  while (!pb.is_zero()) {
    Poly r = prem(pa, pb).primitive_part();
    pa = std::move(pb);
    pb = std::move(r);
  }
  return pa.with_positive_lead() * Poly(cg);
}

Poly Poly::divexact(const Poly& g) const {
  if (g.is_zero()) throw Error(Errc::division_by_zero, "polynomial division");
  Poly r = *this;
  std::vector<BigInt> q(
      r.degree() >= g.degree() ? r.degree() - g.degree() + 1 : 0, BigInt(0));
  while (!r.is_zero() && r.degree() >= g.degree()) {
    if (r.lead() % g.lead() != 0) {
      throw Error(Errc::division_by_zero, "inexact polynomial division");
    }
    BigInt qc = r.lead() / g.lead();
    int d = r.degree() - g.degree();
    q[d] = qc;
    r = r - shift(g, d) * Poly(qc);
  }
  if (!r.is_zero()) {
    throw Error(Errc::division_by_zero, "inexact polynomial division");
  }
  return Poly::from_coeffs(std::move(q));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i] == 0) continue;
    bool neg = c_[i] < 0;
    BigInt a = boost::multiprecision::abs(c_[i]);
    std::string t;
    if (i == 0) {
      t = a.str();
    } else {
      if (a != 1) t = a.str() + "*";
      t += "x";
      if (i > 1) t += "^" + std::to_string(i);
    }
    if (s.empty()) {
      s = (neg ? "-" : "") + t;
    } else {
      s += (neg ? "-" : "+") + t;
    }
  }
  return s;
}

Scalar Scalar::zero(const Field& f) {
  Scalar s(f);
  if (f.kind() == FieldKind::rational_function) s.den_ = Poly(BigInt(1));
  return s;
}

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long v) {
  return from_bigint(f, BigInt(v));
}

Scalar Scalar::from_bigint(const Field& f, const BigInt& v) {
  Scalar s(f);
  if (f.kind() == FieldKind::prime) {
    BigInt r = v % f.modulus();
    if (r < 0) r += f.modulus();
    s.r_ = static_cast<std::uint64_t>(r);
  } else {
    s.num_ = Poly(v);
    s.den_ = Poly(BigInt(1));
  }
  return s;
}

Scalar Scalar::from_fraction(const Field& f, Poly num, Poly den) {
  if (f.kind() != FieldKind::rational_function) {
    throw Error(Errc::invalid_argument,
                "fraction of polynomials requires the rational function field");
  }
  Scalar s(f);
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.canonicalize();
  return s;
}

Scalar Scalar::variable(const Field& f) {
  if (f.kind() != FieldKind::rational_function) {
    throw Error(Errc::invalid_argument,
                "the indeterminate x requires the rational function field");
  }
  Scalar s(f);
  s.num_ = Poly::x();
  s.den_ = Poly(BigInt(1));
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind() == FieldKind::prime ? r_ == 0 : num_.is_zero();
}

bool Scalar::is_one() const {
  return field_.kind() == FieldKind::prime
             ? r_ == 1
             : num_ == Poly(BigInt(1)) && den_ == Poly(BigInt(1));
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) {
    throw Error(Errc::mixed_fields,
                field_.str() + " combined with " + o.field_.str());
  }
}

void Scalar::canonicalize() {
  if (den_.is_zero()) {
    throw Error(Errc::division_by_zero, "zero denominator");
  }
  if (num_.is_zero()) {
    den_ = Poly(BigInt(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  num_ = num_.divexact(g);
  den_ = den_.divexact(g);
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.kind() == FieldKind::prime) {
    std::uint64_t p = field_.modulus();
    s.r_ = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(r_) + o.r_) % p);
  } else {
    s.num_ = num_ * o.den_ + o.num_ * den_;
    s.den_ = den_ * o.den_;
    s.canonicalize();
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.kind() == FieldKind::prime) {
    s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  } else {
    s.num_ = -num_;
    s.den_ = den_;
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.kind() == FieldKind::prime) {
    s.r_ = mulmod(r_, o.r_, field_.modulus());
  } else {
    s.num_ = num_ * o.num_;
    s.den_ = den_ * o.den_;
    s.canonicalize();
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  Scalar s(field_);
  if (field_.kind() == FieldKind::prime) {
    s.r_ = invmod(r_, field_.modulus());
  } else {
    s.num_ = den_;
    s.den_ = num_;
    s.canonicalize();
  }
  return s;
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = one(field_);
  Scalar b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  if (field_.kind() == FieldKind::prime) return r_ == o.r_;
  return num_ == o.num_ && den_ == o.den_;
}

std::uint64_t Scalar::residue() const {
  if (field_.kind() != FieldKind::prime) {
    throw Error(Errc::invalid_argument, "residue of a rational function");
  }
  return r_;
}

namespace {

bool needs_parens_as_numerator(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '+' || s[i] == '-') return true;
  }
  return false;
}

bool needs_parens_as_denominator(const std::string& s) {
  return s.find_first_of("+-*^") != std::string::npos;
}

}  // namespace

std::string Scalar::str() const {
  if (field_.kind() == FieldKind::prime) return std::to_string(r_);
  std::string ns = num_.str();
  if (den_ == Poly(BigInt(1))) return ns;
  if (needs_parens_as_numerator(ns)) ns = "(" + ns + ")";
  std::string ds = den_.str();
  if (needs_parens_as_denominator(ds)) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

namespace {

// Grammar:  expr := term (('+'|'-') term)*
//           term := factor (('*'|'/') factor)*
//           factor := '-' factor | base ('^' uint)?
//           base := uint | 'x' | '(' expr ')'
struct ExprParser {
  const Field& f;
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, pos + 1);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (eat('+')) {
        v = v + term();
      } else if (eat('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        v = v / factor();
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    if (eat('-')) return -factor();
    Scalar b = base();
    if (eat('^')) {
      skip_ws();
      if (pos >= s.size() ||
          !std::isdigit(static_cast<unsigned char>(s[pos]))) {
        fail("expected integer exponent");
      }
      long long e = 0;
      while (pos < s.size() &&
             std::isdigit(static_cast<unsigned char>(s[pos]))) {
        e = e * 10 + (s[pos] - '0');
        if (e > 4096) fail("exponent too large");
        ++pos;
      }
      return b.pow(e);
    }
    return b;
  }

  Scalar base() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of expression");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'x') {
      if (f.kind() != FieldKind::rational_function) {
        fail("the indeterminate x is only valid over Qx");
      }
      ++pos;
      return Scalar::variable(f);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt v = 0;
      while (pos < s.size() &&
             std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        ++pos;
      }
      return Scalar::from_bigint(f, v);
    }
    fail("unexpected character");
  }
};

}  // namespace

Scalar parse_scalar(const Field& f, const std::string& text) {
  ExprParser p{f, text};
  Scalar v = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  return v;
}

}  // namespace lagrel
