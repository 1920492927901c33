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

#include "gbslxe/models.hpp"

#include <cmath>
#include <random>

#include "gbslxe/rng.hpp"

namespace gbslxe {

double unitarity_deviation(const CMatrix &u) {
    if (u.rows() != u.cols()) {
        return INFINITY;
    }
    CMatrix d = u * u.adjoint() - CMatrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

UnitaryMatrix::UnitaryMatrix(CMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        fail("unitary must be a non-empty square matrix");
    }
    double dev = unitarity_deviation(entries_);
    if (!(dev < Tolerances::unitarity)) {
        fail("matrix is not unitary (max deviation " + std::to_string(dev) + ")");
    }
}

UnitaryMatrix UnitaryMatrix::identity(int m) {
    if (m < 1) {
        fail("unitary size must be positive");
    }
    return UnitaryMatrix(CMatrix::Identity(m, m));
}

UnitaryMatrix haar_unitary(int m, std::uint64_t seed) {
    if (m < 1) {
        fail("haar_unitary needs M >= 1");
    }
    Rng rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix z(m, m);
    // Fill column-major so the stream layout does not depend on Eigen storage order.
    for (int c = 0; c < m; ++c) {
        for (int r = 0; r < m; ++r) {
            double re = normal(rng);
            double im = normal(rng);
            z(r, c) = Complex(re, im) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    const CMatrix &r = qr.matrixQR();
    for (int k = 0; k < m; ++k) {
        Complex d = r(k, k);
        double mag = std::abs(d);
        Complex phase = mag > 0 ? d / mag : Complex(1.0);
        q.col(k) *= phase;
    }
    return UnitaryMatrix(std::move(q));
}

UnitaryMatrix nearest_unitary(const CMatrix &t) {
    if (t.rows() == 0 || t.rows() != t.cols()) {
        fail("nearest_unitary needs a non-empty square matrix");
    }
    Eigen::JacobiSVD<CMatrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto &s = svd.singularValues();
    if (!(s(s.size() - 1) > 1e-12 * std::max(1.0, s(0)))) {
        fail("matrix is rank deficient; its polar factor is not unique");
    }
    return UnitaryMatrix(svd.matrixU() * svd.matrixV().adjoint());
}

const char *to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::Squeezed:
            return "squeezed";
        case ModelKind::Thermal:
            return "thermal";
        case ModelKind::General:
            return "general";
        case ModelKind::Custom:
            return "custom";
    }
    return "unknown";
}

CMatrix x_matrix(int m) {
    CMatrix x = CMatrix::Zero(2 * m, 2 * m);
    x.topRightCorner(m, m).setIdentity();
    x.bottomLeftCorner(m, m).setIdentity();
    return x;
}

namespace {

CMatrix assemble(const CMatrix &v, const CMatrix &y) {
    const Eigen::Index m = v.rows();
    CMatrix a(2 * m, 2 * m);
    a.topLeftCorner(m, m) = v;
    a.topRightCorner(m, m) = y;
    a.bottomLeftCorner(m, m) = y.conjugate();
    a.bottomRightCorner(m, m) = v.conjugate();
    return a;
}

}  // namespace

GbsModel build_squeezed_model(double r, int squeezed_modes, const UnitaryMatrix &u) {
    if (!(r >= 0) || !std::isfinite(r)) {
        fail("squeezing parameter must be finite and non-negative");
    }
    const int m = u.modes();
    if (squeezed_modes < 1 || squeezed_modes > m) {
        fail("squeezed mode count R must satisfy 1 <= R <= M");
    }
    const CMatrix &uu = u.entries();
    CMatrix v = uu.leftCols(squeezed_modes) * uu.leftCols(squeezed_modes).transpose();
    GbsModel model;
    model.modes = m;
    model.kind = ModelKind::Squeezed;
    model.params.squeezing = r;
    model.params.squeezed_modes = squeezed_modes;
    model.params.lambda.assign(static_cast<std::size_t>(m), 0.0);
    model.params.mu.assign(static_cast<std::size_t>(m), 0.0);
    for (int k = 0; k < squeezed_modes; ++k) {
        model.params.lambda[static_cast<std::size_t>(k)] = std::tanh(r);
    }
    model.a = assemble(std::tanh(r) * v, CMatrix::Zero(m, m));
    return model;
}

GbsModel build_squeezed_model(double r, int squeezed_modes, int m, const UnitaryMatrix &u) {
    if (u.modes() != m) {
        fail("unitary size does not match M");
    }
    return build_squeezed_model(r, squeezed_modes, u);
}

GbsModel build_thermal_model(double nbar, int m) {
    if (!(nbar >= 0) || !std::isfinite(nbar)) {
        fail("mean thermal photon number must be finite and non-negative");
    }
    if (m < 1) {
        fail("mode count must be positive");
    }
    double mu = nbar / (nbar + 1.0);
    GbsModel model;
    model.modes = m;
    model.kind = ModelKind::Thermal;
    model.params.nbar = nbar;
    model.params.lambda.assign(static_cast<std::size_t>(m), 0.0);
    model.params.mu.assign(static_cast<std::size_t>(m), mu);
    model.a = mu * x_matrix(m);
    return model;
}

GbsModel build_general_model(const std::vector<double> &sigma_x, const std::vector<double> &sigma_p,
                             const UnitaryMatrix &u) {
    const int m = u.modes();
    if (sigma_x.size() != static_cast<std::size_t>(m) || sigma_p.size() != static_cast<std::size_t>(m)) {
        fail("variance lists must have length M");
    }
    GbsModel model;
    model.modes = m;
    model.kind = ModelKind::General;
    Eigen::VectorXd lambda(m);
    Eigen::VectorXd mu(m);
    for (int k = 0; k < m; ++k) {
        double sx = sigma_x[static_cast<std::size_t>(k)];
        double sp = sigma_p[static_cast<std::size_t>(k)];
        if (!(sx > 0) || !(sp > 0) || !std::isfinite(sx) || !std::isfinite(sp)) {
            fail("quadrature variances must be positive and finite");
        }
        if (sx * sp < 1.0 - 1e-12) {
            fail("mode " + std::to_string(k) + " violates the uncertainty relation sigma_x sigma_p >= 1");
        }
        double ix = 1.0 / (1.0 + sx);
        double ip = 1.0 / (1.0 + sp);
        lambda(k) = ip - ix;
        mu(k) = 1.0 - (ix + ip);
    }
    model.params.lambda.assign(lambda.data(), lambda.data() + m);
    model.params.mu.assign(mu.data(), mu.data() + m);
    const CMatrix &uu = u.entries();
    CMatrix v = uu * lambda.cast<Complex>().asDiagonal() * uu.transpose();
    CMatrix y = uu * mu.cast<Complex>().asDiagonal() * uu.adjoint();
    model.a = assemble(v, y);
    return model;
}

GbsModel model_from_matrix(const CMatrix &a) {
    if (a.rows() == 0 || a.rows() != a.cols() || a.rows() % 2 != 0) {
        fail("model matrix must be square with even positive dimension");
    }
    if (!a.allFinite()) {
        fail("model matrix has non-finite entries");
    }
    double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (asym > Tolerances::structure) {
        fail("model matrix is not symmetric (deviation " + std::to_string(asym) + ")");
    }
    GbsModel model;
    model.a = a;
    model.modes = static_cast<int>(a.rows() / 2);
    model.kind = ModelKind::Custom;
    return model;
}

GbsModel model_from_husimi_covariance(const CMatrix &sigma) {
    if (sigma.rows() == 0 || sigma.rows() != sigma.cols() || sigma.rows() % 2 != 0) {
        fail("Husimi covariance must be square with even positive dimension");
    }
    Eigen::FullPivLU<CMatrix> lu(sigma);
    if (!lu.isInvertible()) {
        fail("Husimi covariance is singular");
    }
    const int m = static_cast<int>(sigma.rows() / 2);
    CMatrix a = x_matrix(m) * (CMatrix::Identity(2 * m, 2 * m) - lu.inverse());
    // Symmetrize away rounding noise from the inverse.
    a = 0.5 * (a + a.transpose()).eval();
    return model_from_matrix(a);
}

CMatrix husimi_covariance(const GbsModel &model) {
    const Eigen::Index n = model.a.rows();
    CMatrix b = CMatrix::Identity(n, n) - x_matrix(model.modes) * model.a;
    Eigen::FullPivLU<CMatrix> lu(b);
    if (!lu.isInvertible()) {
        fail_numeric("I - XA is singular; the model has no Husimi covariance");
    }
    return lu.inverse();
}

double structure_deviation(const CMatrix &a) {
    const Eigen::Index m = a.rows() / 2;
    CMatrix v = a.topLeftCorner(m, m);
    CMatrix y = a.topRightCorner(m, m);
    double dev = (v - v.transpose()).cwiseAbs().maxCoeff();
    dev = std::max(dev, (y - y.adjoint()).cwiseAbs().maxCoeff());
    dev = std::max(dev, (CMatrix(a.bottomLeftCorner(m, m)) - y.conjugate()).cwiseAbs().maxCoeff());
    dev = std::max(dev, (CMatrix(a.bottomRightCorner(m, m)) - v.conjugate()).cwiseAbs().maxCoeff());
    return dev;
}

ValidityReport validity_check(const GbsModel &model) {
    ValidityReport report;
    const auto &lam = model.params.lambda;
    const auto &mu = model.params.mu;
    if (model.kind != ModelKind::Custom && lam.size() == static_cast<std::size_t>(model.modes) &&
        mu.size() == lam.size()) {
        // G = (mu, lambda; lambda, mu) is a direct sum of 2x2 blocks with
        // eigenvalues mu_k +- lambda_k; it is real symmetric so the spectral
        // norm is the largest eigenvalue magnitude.
        for (std::size_t k = 0; k < lam.size(); ++k) {
            report.g_norm = std::max(report.g_norm, std::abs(mu[k] + lam[k]));
            report.g_norm = std::max(report.g_norm, std::abs(mu[k] - lam[k]));
        }
    } else if (model.a.size() > 0) {
        CMatrix xa = x_matrix(model.modes) * model.a;
        Eigen::JacobiSVD<CMatrix> svd(xa);
        report.g_norm = svd.singularValues()(0);
    }
    report.valid = report.g_norm < 1.0;
    return report;
}

}  // namespace gbslxe
