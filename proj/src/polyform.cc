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

#include "bentforge/polyform.h"

#include <map>
#include <ostream>
#include <stdexcept>

namespace bentforge {

DillonPolynomial expand_h1(Element a, Element b, FieldPtr field) {
  if (b.is_zero()) throw std::invalid_argument("expand_h1: b must be nonzero");
  const Field& f = *field;
  const uint32_t q = f.q();
  // The odd-j pattern below needs q/2 - 1 to be odd.
  if (q < 4) throw std::invalid_argument("expand_h1 needs q >= 4");
  DillonPolynomial p{field, std::vector<Element>(q, f.zero()), f.zero(), (a / b).tr()};
  const Element binv = b.inv();
  if (b.on_circle()) {
    // 1/(y + b) over U is a geometric series in y/b that keeps odd powers only.
    Element c = a * binv.square();  // a b^(-1-j) at j = 1
    const Element step = binv.square();
    for (uint32_t j = 1; j <= q; j += 2) {
      p.coeffs[j - 1] = c;
      c = c * step;
    }
    p.top = a * binv;
  } else {
    const Element one = f.one();
    const Element nb = b.norm();
    Element c = a * b.conj() / (one + nb) * binv;
    for (uint32_t j = 1; j <= q; ++j) {
      p.coeffs[j - 1] = c;
      c = c * binv;
    }
    p.top = a / (b * (one + nb));
  }
  return p;
}

TruthTable evaluate(const DillonPolynomial& p) {
  const Field& f = *p.field;
  const uint32_t q = f.q();
  return TruthTable::from_function(p.field, [&](uint32_t x) -> int {
    if (x == 0) return p.constant;
    const uint32_t y = f.pow(x, q - 1);
    uint32_t s = 0;
    for (uint32_t j = q; j >= 1; --j) s = f.mul(s ^ p.coeffs[j - 1].bits(), y);
    return f.tr(s ^ p.top.bits()) ^ p.constant;
  });
}

TracePoly to_trace_poly(const DillonPolynomial& p) {
  const Field& f = *p.field;
  const int m = f.m();
  const uint32_t order = f.order();
  // Tr(c x^(r 2^s)) = Tr(c^(2^(m-s)) x^r), so fold every term onto its leader.
  std::map<uint32_t, Element> folded;
  for (uint32_t j = 1; j <= f.q(); ++j) {
    const Element c = p.coeffs[j - 1];
    if (c.is_zero()) continue;
    const uint32_t e = static_cast<uint32_t>(uint64_t{j} * (f.q() - 1) % order);
    const uint32_t r = coset_leader(e, m);
    int s = 0;
    for (uint64_t v = r; v != e; v = 2 * v % order) ++s;
    const Element moved = c.pow(int64_t{1} << ((m - s) % m));
    auto [it, inserted] = folded.try_emplace(r, moved);
    if (!inserted) it->second += moved;
  }
  TracePoly out;
  for (const auto& [r, coeff] : folded) {
    const Element a = f.trace(coeff, coset_size(r, m));
    if (!a.is_zero()) out.terms.push_back({r, a});
  }
  // x^(q^2-1) is 1 off zero: Tr(top) x^(q^2-1) = Tr(top) + Tr(top)(1 + x^(q^2-1)).
  const int top = p.top.tr();
  if (const int c0 = p.constant ^ top; c0 != 0) out.terms.insert(out.terms.begin(), {0, f.one()});
  out.epsilon = top != 0;
  return out;
}

bool verify_expansion(Element a, Element b, FieldPtr field) {
  return evaluate(expand_h1(a, b, field)) == rational_h(a, b, field);
}

void write_polynomial_csv(std::ostream& out, const DillonPolynomial& p) {
  const Field& f = *p.field;
  out << "exponent,coeff_hex\n";
  out << 0 << ',' << to_hex(static_cast<uint32_t>(p.constant)) << '\n';
  for (uint32_t j = 1; j <= f.q(); ++j) out << j * (f.q() - 1) << ',' << to_hex(p.coeffs[j - 1]) << '\n';
  out << f.order() << ',' << to_hex(p.top) << '\n';
}

}  // namespace bentforge
