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

#ifndef GBSLXE_MODELS_HPP
#define GBSLXE_MODELS_HPP

#include <cstdint>
#include <vector>

#include "gbslxe/common.hpp"

namespace gbslxe {

/// An M x M unitary. Construction checks ||U U^dagger - I||_max against
/// Tolerances::unitarity.
class UnitaryMatrix {
   public:
    UnitaryMatrix() = default;
    explicit UnitaryMatrix(CMatrix entries);

    static UnitaryMatrix identity(int m);

    int modes() const { return static_cast<int>(entries_.rows()); }
    const CMatrix &entries() const { return entries_; }

   private:
    CMatrix entries_;
};

/// max_{ij} |(U U^dagger - I)_{ij}|
double unitarity_deviation(const CMatrix &u);

/// Haar-random unitary from the QR decomposition of a complex Ginibre matrix,
/// with the phases of diag(R) moved into Q. Deterministic per seed.
UnitaryMatrix haar_unitary(int m, std::uint64_t seed);

/// Polar factor U1 U2^dagger of T = U1 D U2^dagger. Throws when T is rank
/// deficient since the factor is then not unique.
UnitaryMatrix nearest_unitary(const CMatrix &t);

enum class ModelKind { Squeezed, Thermal, General, Custom };
const char *to_string(ModelKind kind);

struct ModelParams {
    double squeezing = 0;  // r
    int squeezed_modes = 0;  // R
    double nbar = 0;
    std::vector<double> lambda;
    std::vector<double> mu;
};

/// The 2M x 2M matrix A = (V, Y; Y*, V*) together with how it was built.
struct GbsModel {
    CMatrix a;
    int modes = 0;
    ModelKind kind = ModelKind::Custom;
    ModelParams params;
};

/// X = (0, I; I, 0) of size 2M.
CMatrix x_matrix(int m);

/// A_sqz = tanh(r) (V + V*), V = U zeta U^T with zeta = I_R + 0_{M-R}.
GbsModel build_squeezed_model(double r, int squeezed_modes, const UnitaryMatrix &u);
GbsModel build_squeezed_model(double r, int squeezed_modes, int m, const UnitaryMatrix &u);
/// A_thm = nbar/(nbar+1) X.
GbsModel build_thermal_model(double nbar, int m);
/// Takes quadrature variances in the dimensionless form 2 sigma / hbar. Pairs
/// with sigma_x sigma_p < 1 describe no physical state and are rejected.
GbsModel build_general_model(const std::vector<double> &sigma_x, const std::vector<double> &sigma_p,
                             const UnitaryMatrix &u);
/// A = X (I - Sigma^{-1}).
GbsModel model_from_husimi_covariance(const CMatrix &sigma);
/// Sigma = (I - X A)^{-1}, the inverse of the previous map.
CMatrix husimi_covariance(const GbsModel &model);
/// Raw A input. Only symmetry is enforced; the result is tagged Custom.
GbsModel model_from_matrix(const CMatrix &a);

/// Largest violation of V = V^T, Y = Y^dagger and the conjugate lower blocks.
double structure_deviation(const CMatrix &a);

struct ValidityReport {
    double g_norm = 0;
    bool valid = false;
};

/// ||G||_2 from the single-mode parameters, or ||X A||_2 for custom models
/// (the two agree since X A is unitarily similar to the conjugate of G).
ValidityReport validity_check(const GbsModel &model);

}  // namespace gbslxe

#endif
