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

#ifndef BENTFORGE_POLYFORM_H_
#define BENTFORGE_POLYFORM_H_

#include <iosfwd>
#include <vector>

#include "bentforge/boolfun.h"
#include "bentforge/gf2m.h"

namespace bentforge {

// Tr(sum_{j=1..q} coeffs[j-1] x^(j(q-1)) + top x^(q^2-1)) + constant.
//
// `top` is the full coefficient of x^(q^2-1), a factor of a included, so
// the polynomial can be evaluated as written.
struct DillonPolynomial {
  FieldPtr field;
  std::vector<Element> coeffs;
  Element top;
  int constant = 0;
};

// Ordinary polynomial form of Tr(a / (x^(q-1) + b)). Throws for b = 0 or
// q = 2.
DillonPolynomial expand_h1(Element a, Element b, FieldPtr field);

// Direct evaluation of the polynomial at every point.
TruthTable evaluate(const DillonPolynomial& p);

// The same function in the unique trace representation: terms merged per
// cyclotomic coset, coefficients pushed into their coset subfields.
TracePoly to_trace_poly(const DillonPolynomial& p);

// True iff the expansion agrees with rational_h(a, b) at every point.
bool verify_expansion(Element a, Element b, FieldPtr field);

// CSV "exponent,coeff_hex" sorted by exponent; exponent 0 carries the
// constant bit.
void write_polynomial_csv(std::ostream& out, const DillonPolynomial& p);

}  // namespace bentforge

#endif  // BENTFORGE_POLYFORM_H_
