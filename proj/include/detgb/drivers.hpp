// Copyright 2026 The Authors.
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


#ifndef DETGB_DRIVERS_HPP_
#define DETGB_DRIVERS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "detgb/determinantal.hpp"
#include "detgb/monomial_ideal.hpp"
#include "detgb/report.hpp"

namespace detgb {

struct RunOptions {
  std::optional<std::string> order;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> seeds = {1, 2, 3};
  int trials = 3;
  int m = 2;
  int n = 3;
  std::uint64_t max_markings = 1000000;
  std::size_t max_cones = 20000;
  std::size_t max_generators = 20;
  Field field = Field::default_field();
  // hilbert: use the closed formula for (m, n) instead of a matrix.
  std::optional<std::pair<int, int>> closed;
  // remark-1.3: expected codimension of the minors' ideal.
  std::optional<std::size_t> expect_codimension;
  // remark-1.3: claim a generator above degree m for every term order, not
  // only for degrevlex.
  std::optional<bool> all_orders;
};

// Keys mirror the fields above ("max-markings" style is also accepted).
// Throws kParse on unknown keys or wrong types.
RunOptions parse_run_options(const Json& j);

const std::vector<std::string>& command_names();
const std::vector<std::string>& driver_names();

// command is one of command_names() or "verify:<driver>". Commands other
// than hilbert --closed and the matrix-free drivers need a matrix.
Report run_command(std::string_view command, const LinearMatrix* matrix, const RunOptions& options);
Report run_driver(std::string_view driver, const LinearMatrix* matrix, const RunOptions& options);

// Variables x_<block>_<k> with the given block sizes; block i has degree e_i.
RingPtr block_ring(const std::vector<int>& sizes, const Field& field);

struct RigidityCorpus {
  // Every radical Borel-fixed ideal, as an intersection of an antichain of
  // P_b primes.
  std::vector<MonomialIdeal> radical;
  // Borel closures of single monomials of degree 2 and 3 and of pairs of
  // degree-2 monomials.
  std::vector<MonomialIdeal> other;
};

// All block shapes with at most two blocks and at most six variables.
RigidityCorpus rigidity_corpus();
RigidityCorpus rigidity_corpus(const RingPtr& ring);

}  // namespace detgb

#endif  // DETGB_DRIVERS_HPP_
