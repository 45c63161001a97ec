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

#include "bentforge/boolfun.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace bentforge {

TruthTable::TruthTable(FieldPtr field) : field_(std::move(field)), bits_(field_->size(), 0) {}

TruthTable::TruthTable(FieldPtr field, std::vector<uint8_t> bits)
    : field_(std::move(field)), bits_(std::move(bits)) {
  if (bits_.size() != field_->size()) {
    throw std::invalid_argument("truth table has " + std::to_string(bits_.size()) +
                                " entries, expected " + std::to_string(field_->size()));
  }
  for (auto& b : bits_) b &= 1;
}

int TruthTable::weight() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1)); }

TruthTable TruthTable::operator^(const TruthTable& o) const {
  if (o.size() != size()) throw std::invalid_argument("truth tables over different fields");
  std::vector<uint8_t> out(bits_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = bits_[i] ^ o.bits_[i];
  return TruthTable(field_, std::move(out));
}

TruthTable TruthTable::complement() const {
  std::vector<uint8_t> out(bits_);
  for (auto& b : out) b ^= 1;
  return TruthTable(field_, std::move(out));
}

// --- trace polynomials ---------------------------------------------------------

int coset_size(uint32_t j, int m) {
  const uint64_t order = (uint64_t{1} << m) - 1;
  uint64_t k = j % order;
  for (int o = 1; o <= m; ++o) {
    k = (2 * k) % order;
    if (k == j % order) return o;
  }
  return m;
}

uint32_t coset_leader(uint32_t j, int m) {
  const uint64_t order = (uint64_t{1} << m) - 1;
  uint64_t k = j % order;
  uint64_t best = k;
  for (int i = 1; i < m; ++i) {
    k = (2 * k) % order;
    best = std::min(best, k);
  }
  return static_cast<uint32_t>(best);
}

TruthTable from_trace_poly(const TracePoly& p, FieldPtr field) {
  const Field& f = *field;
  const int m = f.m();
  struct Prepared {
    uint32_t exponent;
    uint32_t coeff;
    uint32_t unit;  // c with Tr_o^m(c) = 1
  };
  std::vector<Prepared> prepared;
  std::set<uint32_t> leaders;
  for (const auto& t : p.terms) {
    if (t.exponent >= f.order()) {
      throw std::invalid_argument("exponent " + std::to_string(t.exponent) + " out of range");
    }
    if (!leaders.insert(coset_leader(t.exponent, m)).second) {
      throw std::invalid_argument("exponent " + std::to_string(t.exponent) +
                                  " repeats a cyclotomic coset");
    }
    const int o = coset_size(t.exponent, m);
    const uint32_t a = t.coeff.bits();
    if (f.pow(a, int64_t{1} << o) != a) {
      throw std::invalid_argument("coefficient " + to_hex(a) + " of x^" + std::to_string(t.exponent) +
                                  " is not in GF(2^" + std::to_string(o) + ")");
    }
    uint32_t unit = 0;
    for (uint32_t c = 1; c < f.size(); ++c) {
      if (f.trace(f.element(c), o).is_one()) {
        unit = c;
        break;
      }
    }
    prepared.push_back({t.exponent, a, unit});
  }
  return TruthTable::from_function(field, [&](uint32_t x) {
    int bit = 0;
    for (const auto& t : prepared) {
      // Tr_1^o(y) = Tr_1^m(y c) for y in GF(2^o).
      bit ^= f.tr(f.mul(f.mul(t.coeff, f.pow(x, t.exponent)), t.unit));
    }
    if (p.epsilon && x == 0) bit ^= 1;
    return bit;
  });
}

TruthTable rational_h(Element a, Element b, FieldPtr field) {
  if (b.is_zero()) throw std::invalid_argument("rational_h: b must be nonzero");
  const Field& f = *field;
  const uint32_t q = f.q();
  return TruthTable::from_function(field, [&](uint32_t x) {
    const uint32_t y = f.pow(x, q - 1);
    return f.tr(f.div(a.bits(), y ^ b.bits()));
  });
}

// --- Walsh transform -----------------------------------------------------------

std::vector<uint32_t> trace_gram_rows(const Field& field) {
  std::vector<uint32_t> rows(field.m(), 0);
  for (int i = 0; i < field.m(); ++i) {
    for (int j = 0; j < field.m(); ++j) {
      if (field.tr(field.mul(1u << i, 1u << j))) rows[i] |= 1u << j;
    }
  }
  return rows;
}

void hadamard_transform(std::span<int32_t> v) {
  const std::size_t n = v.size();
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * len) {
      for (std::size_t j = i; j < i + len; ++j) {
        const int32_t a = v[j];
        const int32_t b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
    }
  }
}

WalshSpectrum walsh(const TruthTable& f) {
  const Field& field = f.field();
  std::vector<int32_t> h(f.size());
  for (uint32_t x = 0; x < h.size(); ++x) h[x] = chi(f[x]);
  hadamard_transform(h);
  // Tr(w x) = <G w, x>, so W(w) is the Hadamard coefficient at G w.
  const auto rows = trace_gram_rows(field);
  std::vector<uint32_t> coord(f.size(), 0);
  WalshSpectrum out{std::vector<int32_t>(f.size())};
  out.values[0] = h[0];
  for (uint32_t w = 1; w < coord.size(); ++w) {
    coord[w] = coord[w & (w - 1)] ^ rows[std::countr_zero(w)];
    out.values[w] = h[coord[w]];
  }
  return out;
}

WalshSpectrum walsh_naive(const TruthTable& f) {
  const Field& field = f.field();
  WalshSpectrum out{std::vector<int32_t>(f.size(), 0)};
  for (uint32_t w = 0; w < f.size(); ++w) {
    int32_t s = 0;
    for (uint32_t x = 0; x < f.size(); ++x) s += chi(f[x] ^ field.tr(field.mul(w, x)));
    out.values[w] = s;
  }
  return out;
}

bool is_bent(const WalshSpectrum& spectrum, int m) {
  if (m % 2 != 0) throw std::invalid_argument("bent functions need even m");
  const int32_t mag = 1 << (m / 2);
  return std::all_of(spectrum.values.begin(), spectrum.values.end(),
                     [mag](int32_t v) { return v == mag || v == -mag; });
}

bool is_bent(const TruthTable& f) {
  const int m = f.field().m();
  if (m % 2 != 0) throw std::invalid_argument("bent functions need even m");
  // W(0) = 2^m - 2 wt(f) is one of the spectrum values; check it first.
  const int32_t w0 = static_cast<int32_t>(f.size()) - 2 * f.weight();
  if (std::abs(w0) != (1 << (m / 2))) return false;
  return is_bent(walsh(f), m);
}

TruthTable dual(const TruthTable& f) {
  const auto s = walsh(f);
  if (!is_bent(s, f.field().m())) throw std::invalid_argument("dual: function is not bent");
  std::vector<uint8_t> bits(s.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = s.values[i] < 0;
  return TruthTable(f.field_ptr(), std::move(bits));
}

// --- ANF -------------------------------------------------------------------------

std::vector<uint8_t> anf(const TruthTable& f) {
  std::vector<uint8_t> a(f.bits().begin(), f.bits().end());
  for (std::size_t len = 1; len < a.size(); len <<= 1) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i & len) a[i] ^= a[i ^ len];
    }
  }
  return a;
}

int anf_degree(const TruthTable& f) {
  const auto a = anf(f);
  int deg = 0;
  for (uint32_t i = 0; i < a.size(); ++i) {
    if (a[i]) deg = std::max(deg, std::popcount(i));
  }
  return deg;
}

// --- hyper-bentness ----------------------------------------------------------------

TruthTable compose_power(const TruthTable& f, uint32_t i) {
  const Field& field = f.field();
  return TruthTable::from_function(f.field_ptr(), [&](uint32_t x) { return f[field.pow(x, i)]; });
}

std::vector<uint32_t> coprime_coset_leaders(int m) {
  const uint32_t order = (1u << m) - 1;
  std::vector<uint32_t> out;
  for (uint32_t i = 1; i < order; ++i) {
    if (std::gcd(i, order) == 1 && coset_leader(i, m) == i) out.push_back(i);
  }
  if (order == 1) out.push_back(1);
  return out;
}

bool is_hyper_bent_def(const TruthTable& f) {
  const int m = f.field().m();
  if (m > kMaxHyperBentDegree) {
    throw std::invalid_argument("is_hyper_bent_def is limited to m <= 12; use the unit-circle weight criterion");
  }
  if (!is_bent(f)) return false;
  for (uint32_t i : coprime_coset_leaders(m)) {
    if (i != 1 && !is_bent(compose_power(f, i))) return false;
  }
  return true;
}

// --- text formats ------------------------------------------------------------------

void write_truth_table(std::ostream& out, const TruthTable& f) {
  out << "m=" << f.field().m() << '\n';
  std::string line(f.size(), '0');
  for (std::size_t i = 0; i < f.size(); ++i) line[i] = f[static_cast<uint32_t>(i)] ? '1' : '0';
  out << line << '\n';
}

TruthTable read_truth_table(std::istream& in, FieldPtr field) {
  std::string header;
  if (!std::getline(in, header) || header.rfind("m=", 0) != 0) {
    throw std::runtime_error("truth table: missing 'm=<int>' header");
  }
  int m = 0;
  try {
    m = std::stoi(header.substr(2));
  } catch (const std::exception&) {
    throw std::runtime_error("truth table: bad header '" + header + "'");
  }
  if (!field) field = Field::make(m);
  if (field->m() != m) throw std::runtime_error("truth table: header m does not match field");
  std::vector<uint8_t> bits;
  bits.reserve(field->size());
  char c;
  while (in.get(c)) {
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<uint8_t>(c - '0'));
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw std::runtime_error(std::string("truth table: unexpected character '") + c + "'");
    }
  }
  if (bits.size() != field->size()) {
    throw std::runtime_error("truth table: expected " + std::to_string(field->size()) +
                             " entries, got " + std::to_string(bits.size()));
  }
  return TruthTable(std::move(field), std::move(bits));
}

void write_spectrum_csv(std::ostream& out, const WalshSpectrum& s) {
  out << "omega_hex,value\n";
  for (uint32_t w = 0; w < s.size(); ++w) out << to_hex(w) << ',' << s.values[w] << '\n';
}

}  // namespace bentforge
