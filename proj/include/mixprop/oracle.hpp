/*
Copyright (c) 2026 The mixprop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Dense reference computations of transition powers and exact rows of the
// mixed-order propagation matrix. Used to check the push path; plain loops
// only, no shared kernels with the library.

#include <cstddef>
#include <vector>

#include "mixprop/dense.hpp"
#include "mixprop/graph.hpp"
#include "mixprop/pushprop.hpp"

namespace mixprop::oracle {

inline constexpr std::size_t kDefaultCap = 2000;

// Dense P = D^-1 A.
DenseMatrix dense_transition(const CsrGraph& graph, std::size_t cap = kDefaultCap);

// P^0 .. P^N, each by one more dense multiplication with P.
std::vector<DenseMatrix> dense_transition_powers(const CsrGraph& graph, std::size_t order,
                                                 std::size_t cap = kDefaultCap);

// Row `source` of sum_n w_n P^n.
std::vector<double> exact_row(const CsrGraph& graph, NodeId source, const PropagationWeights& weights,
                              std::size_t cap = kDefaultCap);

double l1_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace mixprop::oracle
