// Copyright 2026 The lettergraph Authors
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

#include "properties.hpp"

#include "gtest/gtest.h"

namespace properties {
namespace {

constexpr std::size_t kCases = 10000;

void expect_holds(const Outcome& outcome) {
  EXPECT_EQ(outcome.cases, kCases);
  EXPECT_EQ(outcome.failures, 0U) << "first counterexample:\n" << outcome.first_failure;
}

TEST(PropertyTest, ComplementDecoderGivesComplementGraph) {
  expect_holds(complement_duality(101, kCases));
}

TEST(PropertyTest, SubwordDecodesToInducedSubgraph) {
  expect_holds(subword_commutation(202, kCases));
}

TEST(PropertyTest, DistinguishersLieBetweenSameLetterPositions) {
  expect_holds(betweenness(303, kCases));
}

TEST(PropertyTest, SerializationRoundTrips) {
  expect_holds(serialization_round_trip(404, kCases));
}

TEST(PropertyTest, SolverWitnessesVerify) {
  expect_holds(witness_soundness(505, kCases));
}

TEST(PropertyTest, IsomorphismIgnoresLabels) {
  expect_holds(isomorphism_invariance(606, kCases));
}

}  // namespace
}  // namespace properties
