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

#ifndef STOCHALG_MATRIX_FUNCTIONS_HPP
#define STOCHALG_MATRIX_FUNCTIONS_HPP

#include <stdexcept>

#include <Eigen/Dense>

namespace stochalg {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

class MatrixSqrtError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/* Principal square root by the Denman-Beavers coupled Newton iteration
 *     Y <- (Y + Z^{-1}) / 2,  Z <- (Z + Y^{-1}) / 2,  Y_0 = M, Z_0 = I
 * stopped once ||Y^2 - M||_F <= tol ||M||_F. Throws MatrixSqrtError after
 * max_iterations or when an iterate becomes singular or non-finite. */
Matrix matrix_sqrt(const Matrix& m, double tol = 1e-12, int max_iterations = 100);

/// Matrix exponential by scaling and squaring with a degree-13 Pade approximant.
Matrix matrix_exp(const Matrix& m);

}  // namespace stochalg

#endif  // STOCHALG_MATRIX_FUNCTIONS_HPP
