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

#ifndef BENTFORGE_CONSTRUCTIONS_H_
#define BENTFORGE_CONSTRUCTIONS_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bentforge/boolfun.h"
#include "bentforge/expsums.h"
#include "bentforge/gf2m.h"

namespace bentforge {

inline constexpr int kMaxArity = 4;

// A reduced polynomial F(X_1, ..., X_t) given by its truth table. Bit i of
// `table` is F at the point whose coordinate X_j is bit j-1 of i.
class Combiner {
 public:
  Combiner() = default;
  // Throws if t is outside [1, kMaxArity] or the table has bits beyond 2^t.
  Combiner(int t, uint32_t table);

  // "0xe8" (arity inferred as the smallest t that fits), "3:0x80" (forced
  // arity), or one of the names x1, x1x2, maj3, x1x2x3.
  static Combiner parse(std::string_view spec);

  static Combiner x1() { return {1, 0x2}; }
  static Combiner x1x2() { return {2, 0x8}; }
  static Combiner majority3() { return {3, 0xe8}; }
  static Combiner x1x2x3() { return {3, 0x80}; }

  int t() const { return t_; }
  uint32_t table() const { return table_; }
  std::string table_hex() const { return to_hex(table_); }
  int operator()(uint32_t x) const { return (table_ >> x) & 1; }
  // W_F(alpha) for alpha in [0, 2^t), same bit order as the table.
  const std::vector<int>& walsh() const { return walsh_; }

  friend bool operator==(const Combiner& a, const Combiner& b) { return a.t_ == b.t_ && a.table_ == b.table_; }

 private:
  int t_ = 1;
  uint32_t table_ = 0;
  std::vector<int> walsh_;
};

// h(x) = F(Tr(a_1/(x^(q-1)+b)), ..., Tr(a_t/(x^(q-1)+b))).
struct HParams {
  std::vector<Element> a;
  Element b;
  Combiner combiner;
};

// Throws on arity mismatch, b = 0, or an odd-degree field.
TruthTable build_h(const HParams& p, FieldPtr field);

// Bits of F's inputs at x = 0, packed like a combiner index.
uint32_t h_inputs_at_zero(const HParams& p);

// 2^t (-1)^h(0) == sum_alpha W_F(alpha) xi(sum_i s_i a_i, b), with the
// closed-form xi. Throws for q = 2.
bool xxeq_criterion(const HParams& p, const KloostermanCache& k);

// Both sides of the F = X1 X2 X3 relation:
//   4 (-1)^h(0)  and  3(q+1) + xi_1 + xi_2 + xi_3 + xi_123 - xi_12 - xi_13 - xi_23.
std::pair<int, int> triple_product_relation(Element a1, Element a2, Element a3, Element b,
                                            const KloostermanCache& k);

// Outcome of a theorem checker. `condition` names the matching condition
// ("1".."6"); a trailing ' marks a match with a2 and a3 swapped.
struct Verdict {
  bool holds = false;
  std::string condition;
  explicit operator bool() const { return holds; }
};

// a1 must be in GF(2^n)*; throws otherwise.
Verdict thm1_check(const KloostermanCache& k, Element a1, Element b);
// Needs n >= 6, a1 in GF(2^n)*, a2 != 0, a1 != a2; throws otherwise.
Verdict thm2_check(const KloostermanCache& k, Element a1, Element a2, Element b);
// Needs n > 2, a1 in GF(2^n)*, a2, a3 nonzero, a1, a2, a3 pairwise different
// and a1 + a2 + a3 != 0; throws otherwise.
Verdict thm3_check(const KloostermanCache& k, Element a1, Element a2, Element a3, Element b);

// Result of moving a1 into GF(2^n): with c = w^(i(q-1)), every a_j and b is
// divided by c and the new h satisfies h'(x) = h(w^i x).
struct Normalized {
  HParams params;
  uint32_t i = 0;
};
Normalized normalize_a1(const HParams& p);

// The theorem that covers p's combiner, evaluated when its preconditions
// hold: "thm1:2", "thm3:4'", "thm2:none", or "n/a".
std::string theorem_label(const HParams& p, const KloostermanCache& k);

// --- parameter-space search ---------------------------------------------------------

struct Scope {
  enum class Kind { kExhaustive, kSample };
  Kind kind = Kind::kExhaustive;
  uint64_t samples = 0;

  static Scope exhaustive() { return {}; }
  static Scope sample(uint64_t k) { return {Kind::kSample, k}; }
  // "exhaustive" or "sample:K".
  static Scope parse(std::string_view s);
  std::string to_string() const;
};

inline constexpr uint64_t kMaxExhaustive = uint64_t{1} << 24;

// Search space: a1 in GF(2^n)*, a_2..a_t in GF(2^m)*, b in GF(2^m)*.
uint64_t parameter_count(const Field& field, const Combiner& f);
HParams params_at(const Field& field, const Combiner& f, uint64_t index);

// Walks the indices visited by a scope: 0..count-1, or `samples` draws
// (with replacement) from an mt19937_64 seeded with `seed`. Throws when an
// exhaustive scope exceeds kMaxExhaustive.
class ScopeCursor {
 public:
  ScopeCursor(const Field& field, const Combiner& f, const Scope& scope, uint64_t seed);

  uint64_t size() const { return size_; }
  uint64_t position() const { return position_; }
  // Advances past up to k indices without returning them.
  void skip(uint64_t k);
  // The next min(k, size() - position()) indices.
  std::vector<uint64_t> next(uint64_t k);

 private:
  bool exhaustive_;
  uint64_t count_;  // parameter_count
  uint64_t size_;
  uint64_t position_ = 0;
  std::mt19937_64 rng_;
};

// All indices of a scope at once.
std::vector<uint64_t> scope_indices(const Field& field, const Combiner& f, const Scope& scope, uint64_t seed);

struct SweepRecord {
  HParams params;
  bool bent = false;                  // xxeq criterion
  std::string matched_condition;      // theorem_label
  bool walsh_verified = false;        // is_bent on the full truth table
};

// Evaluates the given indices in parallel; output order follows `indices`.
std::vector<SweepRecord> evaluate_indices(const KloostermanCache& k, const Combiner& f,
                                          std::span<const uint64_t> indices, int jobs);

// Parameter sets (in visiting order) for which the criterion holds.
std::vector<HParams> enumerate_bent(const KloostermanCache& k, const Combiner& f, const Scope& scope,
                                    uint64_t seed = 1, int jobs = 0);

}  // namespace bentforge

#endif  // BENTFORGE_CONSTRUCTIONS_H_
