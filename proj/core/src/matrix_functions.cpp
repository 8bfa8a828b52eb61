/* Copyright 2026 The stochalg Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "stochalg/matrix_functions.hpp"

#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace stochalg {

Matrix matrix_sqrt(const Matrix& m, double tol, int max_iterations) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_sqrt: matrix is not square");
    const double scale = m.norm();
    if (scale == 0.0) return Matrix::Zero(m.rows(), m.cols());
    Matrix y = m;
    Matrix z = Matrix::Identity(m.rows(), m.cols());
    for (int k = 0; k < max_iterations; ++k) {
        if ((y * y - m).norm() <= tol * scale) return y;
        Eigen::PartialPivLU<Matrix> ly(y), lz(z);
        if (std::abs(ly.determinant()) == 0.0 || std::abs(lz.determinant()) == 0.0)
            throw MatrixSqrtError("matrix_sqrt: singular iterate at step " + std::to_string(k));
        const Matrix yi = ly.inverse();
        const Matrix zi = lz.inverse();
        y = 0.5 * (y + zi);
        z = 0.5 * (z + yi);
        if (!y.allFinite() || !z.allFinite())
            throw MatrixSqrtError("matrix_sqrt: iteration diverged at step " + std::to_string(k));
    }
    if ((y * y - m).norm() <= tol * scale) return y;
    throw MatrixSqrtError("matrix_sqrt: no convergence after " + std::to_string(max_iterations) +
                          " iterations (a real negative eigenvalue, or the step size is too large)");
}

Matrix matrix_exp(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix_exp: matrix is not square");
    return m.exp();
}

}  // namespace stochalg
