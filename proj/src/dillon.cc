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

#include "bentforge/dillon.h"

#include <ostream>
#include <stdexcept>
#include <string>

namespace bentforge {

namespace {

void require_quadratic(const Field& f) {
  if (!f.is_quadratic()) throw std::invalid_argument("Dillon-like functions need an even-degree field");
}

// Position of lambda in unit_circle(); lambda must be on U.
uint32_t index_on_circle(const Field& f, uint32_t lambda) { return f.log(lambda) / (f.q() - 1); }

}  // namespace

int DillonFunction::circle_sum() const {
  int s = 0;
  for (uint8_t bit : g_on_circle) s += chi(bit);
  return s;
}

DillonFunction make_dillon(FieldPtr field, std::vector<uint8_t> g_on_circle, int g_at_zero) {
  require_quadratic(*field);
  if (g_on_circle.size() != field->q() + 1) {
    throw std::invalid_argument("expected " + std::to_string(field->q() + 1) + " circle values, got " +
                                std::to_string(g_on_circle.size()));
  }
  for (auto& b : g_on_circle) b &= 1;
  return DillonFunction{std::move(field), std::move(g_on_circle), static_cast<uint8_t>(g_at_zero & 1)};
}

std::optional<DillonFunction> detect_dillon(const TruthTable& f) {
  const Field& field = f.field();
  require_quadratic(field);
  const uint32_t q = field.q();
  const uint32_t step = q + 1;
  for (uint32_t x = 1; x < f.size(); ++x) {
    if (f[field.exp((field.log(x) + step) % field.order())] != f[x]) return std::nullopt;
  }
  // x = w^k gives x^(q-1) = w^(k(q-1)), the k-th circle element.
  std::vector<uint8_t> circle(q + 1);
  for (uint32_t k = 0; k <= q; ++k) circle[k] = static_cast<uint8_t>(f[field.exp(k)]);
  return DillonFunction{f.field_ptr(), std::move(circle), static_cast<uint8_t>(f[0])};
}

TruthTable to_truth_table(const DillonFunction& d) {
  const Field& field = *d.field;
  return TruthTable::from_function(d.field, [&](uint32_t x) -> int {
    if (x == 0) return d.g_at_zero;
    return d.g_on_circle[circle_index(field, x)];
  });
}

int restricted_walsh(const DillonFunction& d, Element alpha) {
  const Field& f = *d.field;
  const int q = static_cast<int>(f.q());
  if (alpha.is_zero()) {
    int s = 0;
    for (uint32_t k = 0; k <= f.q(); ++k) {
      const uint32_t lambda = f.exp(k * (f.q() - 1));
      s += chi(d.g(index_on_circle(f, f.pow(f.conj(lambda), 2))));
    }
    return chi(d.g_at_zero) + (q - 1) * s;
  }
  const uint32_t target = f.pow(alpha.bits(), 1 - static_cast<int64_t>(q));
  return chi(d.g_at_zero) - d.circle_sum() + chi(d.g(index_on_circle(f, target))) * q;
}

WalshSpectrum restricted_spectrum(const DillonFunction& d) {
  const Field& f = *d.field;
  WalshSpectrum out{std::vector<int32_t>(f.size())};
  for (uint32_t a = 0; a < f.size(); ++a) out.values[a] = restricted_walsh(d, f.element(a));
  return out;
}

bool bent_criterion_U(const DillonFunction& d) {
  if (d.field->q() <= 2) throw std::invalid_argument("unit-circle bent criterion needs q > 2");
  return d.circle_sum() == chi(d.g_at_zero);
}

bool hyperbent_weight_criterion(const DillonFunction& d) {
  // f(w^i) = g(w^(i(q-1))) is circle entry i, for i = 0..q.
  int weight = 0;
  for (uint8_t bit : d.g_on_circle) weight += (bit ^ d.g_at_zero);
  return 2 * weight == static_cast<int>(d.field->q());
}

DillonFunction dillon_dual(const DillonFunction& d) {
  if (!bent_criterion_U(d)) throw std::invalid_argument("dillon_dual: function is not bent");
  const Field& f = *d.field;
  const uint64_t e = static_cast<uint64_t>(f.q()) * f.q() - f.q();
  std::vector<uint8_t> circle(f.q() + 1);
  for (uint32_t k = 0; k <= f.q(); ++k) {
    // dual(w^k) = g(w^(k(q^2 - q))).
    const uint32_t x = f.exp(k);
    circle[k] = d.g_on_circle[index_on_circle(f, f.pow(x, static_cast<int64_t>(e)))];
  }
  return DillonFunction{d.field, std::move(circle), d.g_at_zero};
}

void write_circle_csv(std::ostream& out, const DillonFunction& d) {
  const Field& f = *d.field;
  out << "lambda_hex,g_bit\n";
  for (uint32_t k = 0; k < d.g_on_circle.size(); ++k) {
    out << to_hex(f.exp(k * (f.q() - 1))) << ',' << int{d.g_on_circle[k]} << '\n';
  }
}

}  // namespace bentforge
