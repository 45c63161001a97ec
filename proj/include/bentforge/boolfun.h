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

#ifndef BENTFORGE_BOOLFUN_H_
#define BENTFORGE_BOOLFUN_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "bentforge/gf2m.h"

namespace bentforge {

// A Boolean function on GF(2^m), indexed by the integer value of the
// polynomial-basis bit vector of its argument.
class TruthTable {
 public:
  // The zero function.
  explicit TruthTable(FieldPtr field);
  TruthTable(FieldPtr field, std::vector<uint8_t> bits);

  template <typename Fn>
  static TruthTable from_function(FieldPtr field, Fn&& fn) {
    std::vector<uint8_t> bits(field->size());
    for (uint32_t x = 0; x < bits.size(); ++x) bits[x] = static_cast<uint8_t>(fn(x) & 1);
    return TruthTable(std::move(field), std::move(bits));
  }

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t size() const { return bits_.size(); }
  int operator[](uint32_t x) const { return bits_[x]; }
  int operator()(Element x) const { return bits_[x.bits()]; }
  std::span<const uint8_t> bits() const { return bits_; }
  int weight() const;

  TruthTable operator^(const TruthTable& o) const;
  TruthTable complement() const;

  friend bool operator==(const TruthTable& a, const TruthTable& b) { return a.bits_ == b.bits_; }

 private:
  FieldPtr field_;
  std::vector<uint8_t> bits_;
};

// sum_j Tr_1^{o(j)}(a_j x^j) + epsilon (1 + x^(2^m - 1)), one term per
// cyclotomic coset of exponents modulo 2^m - 1.
struct TracePoly {
  struct Term {
    uint32_t exponent;
    Element coeff;
  };
  std::vector<Term> terms;
  bool epsilon = false;
};

// Size of the cyclotomic coset of j modulo 2^m - 1.
int coset_size(uint32_t j, int m);
// Smallest element of the cyclotomic coset of j modulo 2^m - 1.
uint32_t coset_leader(uint32_t j, int m);

// Throws std::invalid_argument if two terms share a coset or a coefficient
// lies outside GF(2^{o(j)}).
TruthTable from_trace_poly(const TracePoly& p, FieldPtr field);

// x -> Tr_1^m(a / (x^(q-1) + b)) with 1/0 = 0. Throws for b = 0.
TruthTable rational_h(Element a, Element b, FieldPtr field);

struct WalshSpectrum {
  std::vector<int32_t> values;
  int32_t operator[](uint32_t omega) const { return values[omega]; }
  std::size_t size() const { return values.size(); }
  friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

// Rows of the Gram matrix G[i][j] = Tr_1^m(x^i x^j) packed as bit masks.
// Row i is the coordinate vector of the linear form x -> Tr(x^i x).
std::vector<uint32_t> trace_gram_rows(const Field& field);

// W_f(w) = sum_x (-1)^(f(x) + Tr(w x)). walsh() runs the fast Hadamard
// transform and maps each w through the Gram matrix; walsh_naive() is the
// direct double sum.
WalshSpectrum walsh(const TruthTable& f);
WalshSpectrum walsh_naive(const TruthTable& f);

// In-place Hadamard transform over the bit-vector index.
void hadamard_transform(std::span<int32_t> v);

// Requires even m (throws otherwise).
bool is_bent(const TruthTable& f);
bool is_bent(const WalshSpectrum& spectrum, int m);

// (-1)^dual(x) = W_f(x) / 2^n. Throws if f is not bent.
TruthTable dual(const TruthTable& f);

// ANF coefficients by the Moebius transform, indexed by monomial bit mask.
std::vector<uint8_t> anf(const TruthTable& f);
// Zero function has degree 0.
int anf_degree(const TruthTable& f);

// x -> f(x^i).
TruthTable compose_power(const TruthTable& f, uint32_t i);

// Exponents i coprime to 2^m - 1, one per cyclotomic coset.
std::vector<uint32_t> coprime_coset_leaders(int m);

inline constexpr int kMaxHyperBentDegree = 12;

// True iff x -> f(x^i) is bent for every i coprime to 2^m - 1. Only one
// exponent per cyclotomic coset is tried since x -> x^2 is linear.
// Throws for m > 12.
bool is_hyper_bent_def(const TruthTable& f);

// Text form: "m=<int>" then 2^m characters '0'/'1'.
void write_truth_table(std::ostream& out, const TruthTable& f);
// Without a field, the default polynomial for m is used.
TruthTable read_truth_table(std::istream& in, FieldPtr field = nullptr);

// CSV "omega_hex,value" with a header row.
void write_spectrum_csv(std::ostream& out, const WalshSpectrum& s);

}  // namespace bentforge

#endif  // BENTFORGE_BOOLFUN_H_
