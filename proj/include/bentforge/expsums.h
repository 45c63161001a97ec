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

#ifndef BENTFORGE_EXPSUMS_H_
#define BENTFORGE_EXPSUMS_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bentforge/gf2m.h"

namespace bentforge {

enum class SumMode { kClosed, kBrute };

// K(a) = sum_{x in F} (-1)^Tr(1/x + a x) over the whole field F, with the
// x = 0 term counted as +1. Throws for a = 0.
int kloosterman(const Field& field, Element a);

// K_n(a) over the half field GF(2^n) of an even-degree field, for a in
// GF(2^n)*.
int kloosterman_half(const Field& field, Element a);

// sum over {y : Tr(a/y) = 1} of (-1)^Tr(y), over the whole field.
int kloosterman_variant(const Field& field, Element a);

// True iff K is a multiple of 4 in [-2^(n/2+1) + 1, 2^(n/2+1) + 1].
bool kloosterman_value_plausible(int n, int value);

// All K_n(a), a in GF(2^n)*, for GF(2^n) with its default polynomial.
// Elements are keyed by their bit vector in that basis.
class KloostermanTable {
 public:
  enum class Source { kComputed, kLoaded };

  // Computed as the Walsh spectrum of x -> Tr(1/x). 1 <= n <= 20.
  static KloostermanTable compute(int n);
  // "n=<int>" then "a_hex,value" rows. Validates completeness and the
  // mod-4 and range invariants; throws std::runtime_error otherwise.
  static KloostermanTable load(std::istream& in);
  void save(std::ostream& out) const;

  int n() const { return n_; }
  Source source() const { return source_; }
  const FieldPtr& field() const { return field_; }
  // a in [1, 2^n).
  int at(uint32_t a) const;
  // Index 0 is unused.
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const KloostermanTable& a, const KloostermanTable& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  KloostermanTable(int n, FieldPtr field, std::vector<int> values, Source source)
      : n_(n), field_(std::move(field)), values_(std::move(values)), source_(source) {}

  int n_;
  FieldPtr field_;
  std::vector<int> values_;
  Source source_;
};

// K_n on the half field of an even-degree field, precomputed once.
class KloostermanCache {
 public:
  explicit KloostermanCache(FieldPtr field);
  // Reuses a table for GF(2^n) through an explicit embedding into the half
  // field. Throws if the table's n is not field->n().
  KloostermanCache(FieldPtr field, const KloostermanTable& table);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  // a in GF(2^n)*; throws for a = 0.
  int operator()(Element a) const;

 private:
  FieldPtr field_;
  std::vector<int> values_;  // indexed by bit vector, valid on the half field
};

// sum_{x in F} (-1)^Tr((A x + B) / (x^2 + x + delta)) over the whole field,
// with 1/0 = 0. Requires A != 0 and B^2/A^2 + B/A + delta != 0.
int rational_sum_S(const Field& field, Element A, Element B, Element delta, SumMode mode);

// xi(a, b) = sum_{lambda in U} (-1)^Tr(a / (lambda + b)), b != 0.
int xi(const KloostermanCache& k, Element a, Element b, SumMode mode);
int xi_brute(const Field& field, Element a, Element b);
int xi_closed(const KloostermanCache& k, Element a, Element b);

// Same sum over U \ {1}.
int m_sum(const Field& field, Element a, Element b);

}  // namespace bentforge

#endif  // BENTFORGE_EXPSUMS_H_
