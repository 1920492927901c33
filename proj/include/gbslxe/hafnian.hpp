// Copyright 2026 The gbslxe Authors
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

#ifndef GBSLXE_HAFNIAN_HPP
#define GBSLXE_HAFNIAN_HPP

#include <vector>

#include "gbslxe/common.hpp"

namespace gbslxe {

/// Photon counts per mode.
using DetectionPattern = std::vector<int>;

int total_photons(const DetectionPattern &n);

/// Hafnian of a symmetric matrix of even dimension by the power-trace
/// inclusion-exclusion formula, O(m^4 2^m) for a 2m x 2m input. The outer sum
/// is split into a fixed number of blocks reduced in order, so the result is
/// independent of `threads` (0 picks the hardware default).
Complex hafnian(const CMatrix &o, unsigned threads = 1);

/// Literal sum over all (2m-1)!! perfect matchings. Reference implementation,
/// refuses inputs above 2m = 16.
Complex hafnian_by_matchings(const CMatrix &o);

/// Glynn's formula in Gray-code order, O(n 2^n).
Complex permanent(const CMatrix &g);

/// Rows and columns k and k+M of A repeated n_k times (ascending mode,
/// copies contiguous, first half before second half).
CMatrix reduce_matrix(const CMatrix &a, const DetectionPattern &n);

/// Rows and columns k of an M x M matrix repeated n_k times.
CMatrix reduce_half(const CMatrix &v, const DetectionPattern &n);

}  // namespace gbslxe

#endif
