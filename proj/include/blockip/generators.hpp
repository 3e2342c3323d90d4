// Copyright 2026 The blockip Authors
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

// Seeded random instances. Every generator is a pure function of its seed
// and shape; right-hand sides come from a hidden random point of the box so
// most instances are feasible (a few have the right-hand side perturbed).

#ifndef BLOCKIP_GENERATORS_HPP_
#define BLOCKIP_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

#include "blockip/bigint.hpp"
#include "blockip/model.hpp"
#include "blockip/reductions.hpp"

namespace blockip {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi]; lo <= hi.
  BigInt uniform(const BigInt& lo, const BigInt& hi);
  long small(long lo, long hi);
  std::size_t index(std::size_t count) {
    return static_cast<std::size_t>(small(0, static_cast<long>(count) - 1));
  }
  bool coin(unsigned percent) { return small(0, 99) < static_cast<long>(percent); }

 private:
  std::uint64_t next() { return engine_(); }
  std::mt19937_64 engine_;
};

struct RandomShape {
  std::size_t max_n = 4;
  std::size_t max_t_a = 3;   // bricks have 1..max_t_a (or the forced) columns
  std::size_t max_t_b = 2;
  std::size_t max_s_d = 2;
  long max_entry = 5;        // |matrix entries|
  long max_width = 4;        // u - l
  long max_bound = 3;        // |l|
  long max_weight = 5;
  unsigned perturb_percent = 15;
};

// A = (1, ..., 1); classifies AllOnesRow.
FourBlockInstance random_ones_instance(std::uint64_t seed,
                                       const RandomShape& shape = {});
// t_A = s_A + 1 in {2, 3}, full row rank, B or C nonzero; classifies
// SnfEligible.
FourBlockInstance random_snf_instance(std::uint64_t seed,
                                      const RandomShape& shape = {});
// As above with B = C = 0 and no head; classifies NFoldSnfEligible.
FourBlockInstance random_nfold_snf_instance(std::uint64_t seed,
                                            const RandomShape& shape = {});
// Random A in Z^{1x2} (rank 1, not all ones) with a nonzero B or C.
FourBlockInstance random_pair_instance(std::uint64_t seed,
                                       const RandomShape& shape = {});

// NFoldSnfEligible instance with exactly n bricks, t_A = 2, and the same
// per-brick distribution for every n.
FourBlockInstance nfold_linear_instance(std::size_t n, std::uint64_t seed);

// Instances whose matrix entries and bounds have `digits` decimal digits.
// The all-ones family pins the head by one coupling equation so that the
// relaxation is integral; the n-fold family is NFoldSnfEligible.
FourBlockInstance logdelta_ones_instance(std::size_t n, unsigned digits,
                                         std::uint64_t seed);
FourBlockInstance logdelta_nfold_instance(std::size_t n, unsigned digits,
                                          std::uint64_t seed);

SubsetSumInstance random_subset_sum(std::uint64_t seed, std::size_t n,
                                    long max_beta);

}  // namespace blockip

#endif  // BLOCKIP_GENERATORS_HPP_
