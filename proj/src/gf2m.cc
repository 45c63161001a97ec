// Copyright 2026 The bentforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bentforge/gf2m.h"

#include <array>
#include <bit>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace bentforge {

namespace {

// Primitive polynomials, index = degree. Degrees 6 and 12 are the Conway
// polynomials x^6+x^4+x^3+x+1 and x^12+x^7+x^6+x^5+x^3+x+1.
constexpr std::array<uint32_t, kMaxDegree + 1> kDefaultPolys = {
    0,         0x3,      0x7,      0xB,      0x13,    0x25,     0x5B,
    0x83,      0x11D,    0x211,    0x46F,    0x805,   0x10EB,   0x201B,
    0x40A9,    0x8003,   0x1002D,  0x20009,  0x41403, 0x80027,  0x1006F3,
};

int degree(uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

// Remainder of a by b over GF(2).
uint64_t poly_mod(uint64_t a, uint64_t b) {
  const int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
  return a;
}

}  // namespace

bool is_irreducible(uint32_t poly) {
  const int d = degree(poly);
  if (d < 1) return false;
  if (d == 1) return true;
  if ((poly & 1) == 0) return false;
  for (uint64_t f = 2; degree(f) <= d / 2; ++f) {
    if (poly_mod(poly, f) == 0) return false;
  }
  return true;
}

// --- Element ---------------------------------------------------------------

Element::Element(const Field& field, uint32_t bits) : field_(&field), bits_(bits) {}

Element Element::operator*(Element o) const { return {field_, field_->mul(bits_, o.bits_)}; }
Element Element::operator/(Element o) const { return {field_, field_->div(bits_, o.bits_)}; }
Element Element::inv() const { return {field_, field_->inv(bits_)}; }
Element Element::pow(int64_t e) const { return {field_, field_->pow(bits_, e)}; }
Element Element::square() const { return {field_, field_->mul(bits_, bits_)}; }

Element Element::sqrt() const {
  // Inverse Frobenius: x^(2^(m-1)).
  return pow(int64_t{1} << (field_->m() - 1));
}

Element Element::conj() const {
  field_->require_quadratic("conj");
  return {field_, field_->conj(bits_)};
}

Element Element::norm() const { return *this * conj(); }
int Element::tr() const { return field_->tr(bits_); }
int Element::tr_half() const { return field_->tr_half(bits_); }

bool Element::in_half_field() const { return conj() == *this; }

bool Element::on_circle() const { return !is_zero() && norm().is_one(); }

// --- Field -----------------------------------------------------------------

uint32_t Field::default_poly(int m) {
  if (m < 1 || m > kMaxDegree) {
    throw std::invalid_argument("no default polynomial for degree " + std::to_string(m));
  }
  return kDefaultPolys[m];
}

FieldPtr Field::make(int m, std::optional<uint32_t> poly) {
  if (m < 1 || m > kMaxDegree) {
    throw std::invalid_argument("field degree must be in [1, " + std::to_string(kMaxDegree) +
                                "], got " + std::to_string(m));
  }
  const uint32_t p = poly.value_or(default_poly(m));
  if (degree(p) != m) {
    throw std::invalid_argument("reduction polynomial " + to_hex(p) + " does not have degree " +
                                std::to_string(m));
  }
  if (!is_irreducible(p)) {
    throw std::invalid_argument("reduction polynomial " + to_hex(p) + " is reducible");
  }
  return FieldPtr(new Field(m, p));
}

Field::Field(int m, uint32_t poly)
    : m_(m),
      n_(m % 2 == 0 ? m / 2 : 0),
      q_(m % 2 == 0 ? (1u << (m / 2)) : 0),
      size_(1u << m),
      order_((1u << m) - 1),
      poly_(poly),
      exp_(2 * static_cast<std::size_t>(order_)),
      log_(size_, 0),
      tr_(size_, 0) {
  // Walk the powers of x; the cycle closes at 1 exactly when x is primitive.
  uint32_t x = 1;
  uint32_t ord = 0;
  do {
    exp_[ord] = x;
    log_[x] = ord;
    ++ord;
    x <<= 1;
    if (x & size_) x ^= poly_;
  } while (x != 1 && ord < order_);
  if (x != 1 || ord != order_) {
    // ord counts steps until 1 reappears; finish the walk to get the order.
    while (x != 1) {
      ++ord;
      x <<= 1;
      if (x & size_) x ^= poly_;
    }
    throw std::invalid_argument("reduction polynomial " + to_hex(poly_) +
                                " is not primitive: generator x has order " +
                                std::to_string(ord) + ", expected " + std::to_string(order_));
  }
  for (uint32_t k = 0; k < order_; ++k) exp_[order_ + k] = exp_[k];

  // Tr_1^m is linear: fix it on the basis x^i by summing Frobenius orbits.
  std::vector<uint8_t> basis_tr(m_);
  for (int i = 0; i < m_; ++i) {
    uint32_t y = 1u << i;
    uint32_t acc = 0;
    for (int j = 0; j < m_; ++j) {
      acc ^= y;
      y = mul(y, y);
    }
    if (acc > 1) throw std::logic_error("trace left GF(2)");
    basis_tr[i] = static_cast<uint8_t>(acc);
  }
  for (uint32_t a = 1; a < size_; ++a) {
    const int low = std::countr_zero(a);
    tr_[a] = tr_[a & (a - 1)] ^ basis_tr[low];
  }

  if (is_quadratic()) {
    for (uint32_t c = 1; c < size_; ++c) {
      if ((c ^ conj(c)) == 1) {
        half_trace_unit_ = c;
        break;
      }
    }
  }
}

void Field::require_quadratic(const char* what) const {
  if (!is_quadratic()) {
    throw std::invalid_argument(std::string(what) + " needs an even-degree field, got m=" +
                                std::to_string(m_));
  }
}

uint32_t Field::pow(uint32_t a, int64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const uint64_t k = static_cast<uint64_t>(log_[a]) * reduce(e) % order_;
  return exp_[k];
}

Element Field::element(uint32_t bits) const {
  if (bits >= size_) {
    throw std::invalid_argument("element " + to_hex(bits) + " does not fit in GF(2^" +
                                std::to_string(m_) + ")");
  }
  return {*this, bits};
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out;
  out.reserve(size_);
  for (uint32_t a = 0; a < size_; ++a) out.emplace_back(*this, a);
  return out;
}

std::vector<Element> Field::nonzero_elements() const {
  std::vector<Element> out;
  out.reserve(order_);
  for (uint32_t a = 1; a < size_; ++a) out.emplace_back(*this, a);
  return out;
}

std::vector<Element> Field::half_field() const {
  require_quadratic("half_field");
  std::vector<Element> out;
  out.reserve(q_);
  out.push_back(zero());
  for (uint32_t k = 0; k + 1 < q_; ++k) out.push_back(w(int64_t{k} * (q_ + 1)));
  return out;
}

Element Field::trace(Element a, int k) const {
  if (k < 1 || m_ % k != 0) {
    throw std::invalid_argument("trace degree " + std::to_string(k) + " does not divide " +
                                std::to_string(m_));
  }
  uint32_t acc = 0;
  uint32_t y = a.bits();
  for (int i = 0; i < m_ / k; ++i) {
    acc ^= y;
    y = pow(y, int64_t{1} << k);
  }
  return {*this, acc};
}

int Field::abs_trace(Element a, int k) const {
  if (k < 1 || m_ % k != 0) {
    throw std::invalid_argument("trace degree " + std::to_string(k) + " does not divide " +
                                std::to_string(m_));
  }
  if (pow(a.bits(), int64_t{1} << k) != a.bits()) {
    throw std::invalid_argument(to_hex(a) + " is not in GF(2^" + std::to_string(k) + ")");
  }
  // Tr_1^k(a) = sum of the first k conjugates.
  uint32_t acc = 0;
  uint32_t y = a.bits();
  for (int i = 0; i < k; ++i) {
    acc ^= y;
    y = mul(y, y);
  }
  return static_cast<int>(acc);
}

FieldPtr field_new(int m, std::optional<uint32_t> reduction_poly) {
  if (m < 2 || m > kMaxEvenDegree || m % 2 != 0) {
    throw std::invalid_argument("m must be even with 2 <= m <= 16, got " + std::to_string(m));
  }
  return Field::make(m, reduction_poly);
}

// --- unit circle and friends -------------------------------------------------

UnitCircle unit_circle(const Field& field) {
  if (!field.is_quadratic()) throw std::invalid_argument("unit circle needs an even-degree field");
  UnitCircle u;
  const uint32_t q = field.q();
  u.elements.reserve(q + 1);
  for (uint32_t k = 0; k <= q; ++k) u.elements.push_back(field.w(int64_t{k} * (q - 1)));
  return u;
}

std::pair<Element, Element> polar_decompose(Element x) {
  if (x.is_zero()) throw std::invalid_argument("polar decomposition of 0");
  const Field& f = x.field();
  // x^(q+1) = y^2 since lambda^(q+1) = 1.
  Element y = x.pow(f.q() + 1).sqrt();
  return {x / y, y};
}

Element u_param(Element u, Element A) {
  if (A.in_half_field()) throw std::invalid_argument("u_param: A must lie outside GF(2^n)");
  if (!u.in_half_field()) throw std::invalid_argument("u_param: u must lie in GF(2^n)");
  return (u + A) / (u + A.conj());
}

int quadratic_roots_in_U(Element a, Element b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("quadratic_roots_in_U: a, b must be nonzero");
  if ((b / a.square()).tr() != 0) return 0;
  const Field& f = a.field();
  const Element one = f.one();
  const Element ab = a / a.conj();
  if (b == ab) return a.norm().inv().tr_half() == 1 ? 2 : 0;
  const Element bb = b.norm();
  const Element lhs = (one + bb) * (one + a.norm() + bb) + a.square() * b.conj() + a.conj().square() * b;
  return lhs.is_zero() ? 1 : 0;
}

// --- text forms --------------------------------------------------------------

std::string to_hex(uint32_t v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", v);
  return buf;
}

std::string to_hex(Element a) { return to_hex(a.bits()); }

uint32_t parse_hex(std::string_view s) {
  std::string_view body = s;
  if (body.size() > 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) body.remove_prefix(2);
  uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v, 16);
  if (body.empty() || ec != std::errc() || ptr != body.data() + body.size()) {
    throw std::invalid_argument("not a hex value: '" + std::string(s) + "'");
  }
  return v;
}

Element parse_element(const Field& field, std::string_view s) {
  if (s == "w") return field.gen();
  if (s.size() > 2 && s[0] == 'w' && s[1] == '^') {
    std::string_view e = s.substr(2);
    int64_t k = 0;
    auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), k);
    if (ec != std::errc() || ptr != e.data() + e.size()) {
      throw std::invalid_argument("bad exponent in '" + std::string(s) + "'");
    }
    return field.w(k);
  }
  return field.element(parse_hex(s));
}

}  // namespace bentforge
