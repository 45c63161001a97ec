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

#ifndef BENTFORGE_GF2M_H_
#define BENTFORGE_GF2M_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bentforge {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Largest extension degree a Field can be built with. Quadratic-tower
// fields (the ones used for bent functions) are limited to kMaxEvenDegree.
inline constexpr int kMaxDegree = 20;
inline constexpr int kMaxEvenDegree = 16;

// (-1)^bit as an integer.
constexpr int chi(int bit) { return (bit & 1) ? -1 : 1; }

// An element of GF(2^m), stored as an m-bit vector in the polynomial basis
// of its field. The field must outlive every element referring to it.
class Element {
 public:
  Element() = default;
  Element(const Field& field, uint32_t bits);

  uint32_t bits() const { return bits_; }
  const Field& field() const { return *field_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == 1; }

  Element operator+(Element o) const { return {field_, bits_ ^ o.bits_}; }
  Element& operator+=(Element o) {
    bits_ ^= o.bits_;
    return *this;
  }
  Element operator*(Element o) const;
  // Division with the convention x/0 = 0.
  Element operator/(Element o) const;

  Element inv() const;
  Element pow(int64_t e) const;
  Element square() const;
  Element sqrt() const;
  // x^(2^n) for m = 2n.
  Element conj() const;
  // x * conj(x), an element of the half field.
  Element norm() const;
  // Absolute trace Tr_1^m.
  int tr() const;
  // Tr_1^n of an element of the half field GF(2^n); unchecked.
  int tr_half() const;
  bool in_half_field() const;
  bool on_circle() const;

  friend bool operator==(Element a, Element b) { return a.bits_ == b.bits_; }
  friend auto operator<=>(Element a, Element b) { return a.bits_ <=> b.bits_; }

 private:
  Element(const Field* field, uint32_t bits) : field_(field), bits_(bits) {}

  const Field* field_ = nullptr;
  uint32_t bits_ = 0;
};

// GF(2^m) = GF(2)[x]/(p(x)) with p primitive, so that the residue class of x
// is a generator w of the multiplicative group. Multiplication, inversion and
// powers go through discrete-log tables built at construction.
//
// Immutable after construction and safe to share between threads.
class Field {
 public:
  // Any degree 1 <= m <= kMaxDegree. Without a polynomial the built-in
  // default for m is used. Throws std::invalid_argument if the polynomial
  // has the wrong degree, is reducible, or is not primitive.
  static FieldPtr make(int m, std::optional<uint32_t> poly = std::nullopt);

  // Default primitive polynomial of degree m, LSB = constant term.
  static uint32_t default_poly(int m);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  int m() const { return m_; }
  // Half degree n = m/2 and q = 2^n; zero when m is odd.
  int n() const { return n_; }
  uint32_t q() const { return q_; }
  uint32_t size() const { return size_; }
  uint32_t order() const { return order_; }
  uint32_t poly() const { return poly_; }
  bool is_quadratic() const { return m_ % 2 == 0; }

  Element zero() const { return {*this, 0}; }
  Element one() const { return {*this, 1}; }
  Element gen() const { return w(1); }
  // w^k for any integer k.
  Element w(int64_t k) const { return {*this, exp(reduce(k))}; }
  // Validates bits < 2^m.
  Element element(uint32_t bits) const;
  std::vector<Element> elements() const;
  std::vector<Element> nonzero_elements() const;
  // 0 and the q-1 nonzero elements of GF(2^n), nonzero ones as w^(k(q+1)).
  std::vector<Element> half_field() const;

  // Tr_k^m(a) for k | m.
  Element trace(Element a, int k) const;
  // Tr_1^k(a) for a in GF(2^k), k | m. Throws if a is outside GF(2^k).
  int abs_trace(Element a, int k) const;

  // Raw table-level arithmetic on bit vectors, for hot loops.
  uint32_t exp(uint32_t k) const { return exp_[k]; }
  uint32_t log(uint32_t a) const { return log_[a]; }
  uint32_t reduce(int64_t k) const {
    int64_t r = k % static_cast<int64_t>(order_);
    return static_cast<uint32_t>(r < 0 ? r + order_ : r);
  }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  uint32_t inv(uint32_t a) const {
    if (a == 0) return 0;
    return exp_[log_[a] == 0 ? 0 : order_ - log_[a]];
  }
  uint32_t div(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + order_ - log_[b]];
  }
  uint32_t pow(uint32_t a, int64_t e) const;
  int tr(uint32_t a) const { return tr_[a]; }
  int tr_half(uint32_t a) const { return tr_[mul(a, half_trace_unit_)]; }
  uint32_t conj(uint32_t a) const {
    if (a == 0) return 0;
    return exp_[static_cast<uint64_t>(log_[a]) * q_ % order_];
  }

 private:
  Field(int m, uint32_t poly);
  void require_quadratic(const char* what) const;

  int m_;
  int n_;
  uint32_t q_;
  uint32_t size_;
  uint32_t order_;
  uint32_t poly_;
  // exp_ has 2*order_ entries so that log a + log b never needs reducing.
  std::vector<uint32_t> exp_;
  std::vector<uint32_t> log_;
  std::vector<uint8_t> tr_;
  // c with Tr_n^m(c) = 1, so Tr_1^n(a) = Tr_1^m(a c) on GF(2^n).
  uint32_t half_trace_unit_ = 0;

  friend class Element;
};

// Builds a field for the bent-function setting: m even, 2 <= m <= 16.
FieldPtr field_new(int m, std::optional<uint32_t> reduction_poly = std::nullopt);

// Irreducibility test by trial division.
bool is_irreducible(uint32_t poly);

// The q+1 elements of U = {x : x^(q+1) = 1}, listed as powers of the circle
// generator w^(q-1).
struct UnitCircle {
  std::vector<Element> elements;
  std::size_t size() const { return elements.size(); }
};

UnitCircle unit_circle(const Field& field);

// Index k with x^(q-1) = w^(k(q-1)) for nonzero x, i.e. the position of
// x^(q-1) in unit_circle().
inline uint32_t circle_index(const Field& field, uint32_t x) {
  return field.log(x) % (field.q() + 1);
}

// x = lambda * y with lambda in U and y in GF(2^n)*. Throws for x = 0.
std::pair<Element, Element> polar_decompose(Element x);

// (u + A) / (u + conj(A)) for u in GF(2^n) and A outside GF(2^n).
Element u_param(Element u, Element A);

// Number of roots of x^2 + a x + b lying on the unit circle, by the
// closed-form criterion. Returns 0 when the polynomial has no roots in the
// field at all. Throws if a or b is zero.
int quadratic_roots_in_U(Element a, Element b);

// "0x1f"-style lowercase hex.
std::string to_hex(uint32_t v);
std::string to_hex(Element a);
// Accepts "0x..", bare hex, or "w^k" / "w".
uint32_t parse_hex(std::string_view s);
Element parse_element(const Field& field, std::string_view s);

}  // namespace bentforge

#endif  // BENTFORGE_GF2M_H_
