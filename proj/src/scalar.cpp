#include "wgalg/scalar.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "wgalg/error.hpp"

namespace wgalg {
namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial; the remainder must vanish.
IntPoly exact_div(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("exact_div: degree too small");
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const Integer c = num[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  for (const auto& r : num) {
    if (r != 0) throw std::logic_error("exact_div: nonzero remainder");
  }
  trim(quot);
  return quot;
}

IntPoly cyclotomic(int n) {
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[n] = 1;
  p[0] = -1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = exact_div(p, cyclotomic(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, p);
  return p;
}

}  // namespace

std::vector<Integer> chebyshev_two_cos(long n) {
  if (n < 0) n = -n;
  IntPoly prev{2};
  if (n == 0) return prev;
  IntPoly cur{0, 1};
  for (long k = 2; k <= n; ++k) {
    IntPoly next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    trim(next);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<Integer> theta_minimal_polynomial(int conductor) {
  if (conductor < 1) throw UnsupportedOrderError("conductor must be positive");
  if (conductor == 1) return {2, 1};  // theta = 2cos(pi) = -2
  const IntPoly phi = cyclotomic(2 * conductor);
  const std::size_t d = (phi.size() - 1) / 2;
  IntPoly result(d + 1, 0);
  result[0] = phi[d];
  for (std::size_t k = 1; k <= d; ++k) {
    const IntPoly ck = chebyshev_two_cos(static_cast<long>(k));
    for (std::size_t i = 0; i < ck.size(); ++i) result[i] += phi[d + k] * ck[i];
  }
  trim(result);
  return result;
}

FieldSpec::FieldSpec(int conductor)
    : conductor_(conductor), minpoly_(theta_minimal_polynomial(conductor)) {}

Field FieldSpec::get(int conductor) {
  static std::mutex mu;
  static std::map<int, Field> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  Field f(new FieldSpec(conductor));
  cache.emplace(conductor, f);
  return f;
}

double FieldSpec::theta_value() const {
  return 2.0 * std::cos(std::numbers::pi / conductor_);
}

std::vector<Rational> FieldSpec::reduce(std::vector<Rational> poly) const {
  const std::size_t d = static_cast<std::size_t>(degree());
  for (std::size_t k = poly.size(); k-- > d;) {
    const Rational c = poly[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= d; ++i) poly[k - d + i] -= c * minpoly_[i];
  }
  poly.resize(d, Rational(0));
  return poly;
}

std::vector<Rational> FieldSpec::two_cos(long j, long m) const {
  if (!contains_order(m)) {
    throw UnsupportedOrderError("2cos(pi*" + std::to_string(j) + "/" + std::to_string(m) +
                                ") is not in Q(2cos(pi/" + std::to_string(conductor_) +
                                "))");
  }
  const IntPoly ck = chebyshev_two_cos(j * (conductor_ / m));
  std::vector<Rational> poly(ck.begin(), ck.end());
  return reduce(std::move(poly));
}

Field make_field(std::span<const int> orders) {
  long l = 1;
  for (int m : orders) {
    if (m < 2) {
      throw UnsupportedOrderError("unsupported order " + std::to_string(m) +
                                  " (orders must be finite and at least 2)");
    }
    l = std::lcm(l, static_cast<long>(m));
  }
  return FieldSpec::get(static_cast<int>(l));
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(Field field, const Rational& q) : field_(std::move(field)) {
  if (field_) {
    coords_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
    coords_[0] = q;
  } else {
    coords_ = {q};
  }
}

FieldElement::FieldElement(Field field, std::vector<Rational> coords)
    : field_(std::move(field)) {
  if (coords.empty()) coords.emplace_back(0);
  if (field_) {
    coords_ = field_->reduce(std::move(coords));
  } else {
    if (coords.size() != 1) throw IncompatibleFieldError("irrational element without a field");
    coords_ = std::move(coords);
  }
}

FieldElement FieldElement::theta(const Field& field) {
  return FieldElement(field, std::vector<Rational>{Rational(0), Rational(1)});
}

FieldElement FieldElement::two_cos(const Field& field, long j, long m) {
  return FieldElement(field, field->two_cos(j, m));
}

Field FieldElement::common_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field_) return b.field_;
  if (!b.field_) return a.field_;
  if (a.field_ != b.field_ && a.field_->conductor() != b.field_->conductor()) {
    throw IncompatibleFieldError("field elements over Q(2cos(pi/" +
                                 std::to_string(a.field_->conductor()) + ")) and Q(2cos(pi/" +
                                 std::to_string(b.field_->conductor()) + "))");
  }
  return a.field_;
}

void FieldElement::attach(const Field& field) {
  if (field_ || !field) return;
  field_ = field;
  coords_ = field_->reduce(std::move(coords_));
}

FieldElement FieldElement::in(const Field& field) const {
  if (!field_ || !field || field_->conductor() == field->conductor()) {
    FieldElement r = *this;
    r.attach(field);
    return r;
  }
  const int from = field_->conductor();
  const int to = field->conductor();
  if (to % from != 0) {
    throw IncompatibleFieldError("Q(2cos(pi/" + std::to_string(from) +
                                 ")) does not embed into Q(2cos(pi/" + std::to_string(to) + "))");
  }
  // 2cos(pi/from) = 2cos(pi k/to) with k = to/from.
  const FieldElement image = two_cos(field, to / from, to);
  FieldElement acc = zero(field);
  FieldElement power = one(field);
  for (const auto& c : coords_) {
    if (c != 0) acc += power * FieldElement(c);
    power *= image;
  }
  return acc;
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool FieldElement::is_one() const {
  if (coords_[0] != 1) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  const Field f = common_field(*this, other);
  attach(f);
  if (other.field_ || !f) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  } else {
    coords_[0] += other.coords_[0];
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  const Field f = common_field(*this, other);
  attach(f);
  if (other.field_ || !f) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  } else {
    coords_[0] -= other.coords_[0];
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  const Field f = common_field(*this, other);
  if (!other.field_) {
    for (auto& c : coords_) c *= other.coords_[0];
    return *this;
  }
  if (!field_) {
    const Rational q = coords_[0];
    coords_ = other.coords_;
    field_ = other.field_;
    for (auto& c : coords_) c *= q;
    return *this;
  }
  std::vector<Rational> prod(coords_.size() + other.coords_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coords_.size(); ++j) {
      if (other.coords_[j] == 0) continue;
      prod[i + j] += coords_[i] * other.coords_[j];
    }
  }
  coords_ = f->reduce(std::move(prod));
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  if (!field_ || is_rational()) {
    FieldElement r = *this;
    const Rational q = 1 / coords_[0];
    for (auto& c : r.coords_) c = 0;
    r.coords_[0] = q;
    return r;
  }
  // Solve M u = e_0 where column j of M holds the coordinates of this * theta^j.
  const std::size_t d = coords_.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
  FieldElement col = *this;
  const FieldElement th = theta(field_);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coords_[i];
    col *= th;
  }
  m[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    const Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> u(d);
  for (std::size_t i = 0; i < d; ++i) u[i] = m[i][d];
  return FieldElement(field_, std::move(u));
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  return *this *= other.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_ && b.field_) {
    FieldElement::common_field(a, b);
    return a.coords_ == b.coords_;
  }
  if (!a.field_ && !b.field_) return a.coords_[0] == b.coords_[0];
  const FieldElement& attached = a.field_ ? a : b;
  const FieldElement& plain = a.field_ ? b : a;
  return attached.is_rational() && attached.coords_[0] == plain.coords_[0];
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  if (a.coords_.size() != b.coords_.size()) return a.coords_.size() < b.coords_.size();
  return a.coords_ < b.coords_;
}

double FieldElement::to_double() const {
  if (!field_) return coords_[0].get_d();
  const double th = field_->theta_value();
  double acc = 0.0;
  for (std::size_t k = coords_.size(); k-- > 0;) acc = acc * th + coords_[k].get_d();
  return acc;
}

namespace {

std::string theta_power(std::size_t k) {
  if (k == 1) return "theta";
  return "theta^" + std::to_string(k);
}

}  // namespace

std::string FieldElement::to_string() const {
  if (is_rational()) return coords_[0].get_str();
  std::vector<std::size_t> nz;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] != 0) nz.push_back(k);
  }
  std::ostringstream out;
  const bool wrap = nz.size() > 1;
  if (wrap) out << '(';
  bool first = true;
  for (std::size_t k : nz) {
    const std::string mono = k == 0 ? std::string() : theta_power(k);
    out << format_term(FieldElement(coords_[k]), mono, first);
    first = false;
  }
  if (wrap) out << ')';
  return out.str();
}

bool FieldElement::needs_parentheses() const {
  return to_string().front() == '(';
}

std::string format_term(const FieldElement& coefficient, const std::string& monomial,
                        bool first) {
  std::string c = coefficient.to_string();
  bool negative = false;
  if (!c.empty() && c.front() == '-') {
    negative = true;
    c.erase(0, 1);
  }
  std::string body;
  if (monomial.empty()) {
    body = c;
  } else if (c == "1") {
    body = monomial;
  } else {
    body = c + "*" + monomial;
  }
  if (first) return negative ? "-" + body : body;
  return negative ? " - " + body : " + " + body;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const FieldElement& c, int exponent) {
  if (!c.is_zero()) terms_.emplace(exponent, c);
}

void LaurentPoly::add_term(int exponent, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FieldElement LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  if (it != terms_.end()) return it->second;
  const Field f = field();
  return f ? FieldElement::zero(f) : FieldElement();
}

std::optional<int> LaurentPoly::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

Field LaurentPoly::field() const {
  for (const auto& [e, c] : terms_) {
    if (c.field()) return c.field();
  }
  return nullptr;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  LaurentPoly result;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) result.add_term(ea + eb, ca * cb);
  }
  // Field compatibility is checked even when one side is zero.
  const Field fa = field();
  const Field fb = other.field();
  if (fa && fb && fa->conductor() != fb->conductor()) {
    throw IncompatibleFieldError("Laurent polynomials over different fields");
  }
  terms_ = std::move(result.terms_);
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    std::string mono;
    if (e == 1) {
      mono = "v";
    } else if (e != 0) {
      mono = "v^" + std::to_string(e);
    }
    out += format_term(it->second, mono, first);
    first = false;
  }
  return out;
}

LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, LaurentOp op) {
  const Field fa = a.field();
  const Field fb = b.field();
  if (fa && fb && fa->conductor() != fb->conductor()) {
    throw IncompatibleFieldError("Laurent polynomials over different fields");
  }
  switch (op) {
    case LaurentOp::kAdd:
      return a + b;
    case LaurentOp::kSub:
      return a - b;
    case LaurentOp::kMul:
      return a * b;
  }
  return {};
}

}  // namespace wgalg
