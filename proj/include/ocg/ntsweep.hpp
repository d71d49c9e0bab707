// Copyright 2026 The ocg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OCG_NTSWEEP_HPP
#define OCG_NTSWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ocg/numtheory.hpp"

namespace ocg {

// One verification sweep: `cases` inputs checked, `pass` iff every one
// matched. `detail` names the first mismatch, or summarizes the recovered
// set when all match.
struct SweepCheck {
  std::string name;
  bool pass = false;
  uint64_t cases = 0;
  std::string detail;
};

// Largest (base, exponent) box the Mobius oracle accepts. Inside it every
// intermediate product fits 512 bits with room to spare.
inline constexpr u64 kOracleSweepMaxBase = 16384;
inline constexpr u64 kOracleSweepMaxExponent = 24;

// The reference lists below are certified up to this bound. The Fermat and
// Mersenne columns are open problems past it, so larger bounds are refused
// rather than guessed at.
inline constexpr u64 kClassicalListBound = 10000;

// Compares zsigmondy_prime against an independent factoring oracle built on
// Mobius inversion, over prime powers q <= qmax and exponents n <= nmax.
SweepCheck zsigmondy_oracle_sweep(u64 qmax, u64 nmax);

// Prime powers q <= qmax whose neighborhoods q-1, q+1, q^2-1 stay smooth
// over tiny prime sets, compared with the classical lists. Shrinking qmax
// recovers a prefix of each list.
std::vector<SweepCheck> smooth_neighborhood_sweeps(u64 qmax);

// (n, x) pairs with x prime <= xmax, n <= nmax whose cyclotomic value at x
// is a 2-power, 3-power, or {3,5}-smooth, against the closed-form pattern.
std::vector<SweepCheck> cyclotomic_pattern_sweeps(u64 xmax, u64 nmax);

}  // namespace ocg

#endif  // OCG_NTSWEEP_HPP
