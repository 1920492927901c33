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

#ifndef GBSLXE_COMMON_HPP
#define GBSLXE_COMMON_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace gbslxe {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Error categories shared by the C++ core and the C API.
enum class ErrorCode : int {
    InvalidArgument = 1,
    Parse = 2,
    Io = 3,
    ResourceGuard = 4,
    Numeric = 5,
};

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(const std::string &msg) { throw Error(ErrorCode::InvalidArgument, msg); }
[[noreturn]] inline void fail_guard(const std::string &msg) { throw Error(ErrorCode::ResourceGuard, msg); }
[[noreturn]] inline void fail_numeric(const std::string &msg) { throw Error(ErrorCode::Numeric, msg); }

/// Tolerances used across the library. Structural checks use `structure`,
/// cross-constructor identities on small M use `identity`.
struct Tolerances {
    static constexpr double structure = 1e-10;
    static constexpr double identity = 1e-12;
    static constexpr double unitarity = 1e-10;
    static constexpr double symmetric = 1e-12;
    static constexpr double negative_probability = 1e-12;
};

/// Default brute-force bound on |K(N)|.
inline constexpr std::uint64_t kDefaultPatternGuard = 1000000;

inline constexpr const char *kVersion = "0.1.0";

double to_double(const Rational &q);
std::string to_string(const Rational &q);
BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
/// n!! with the convention (-1)!! = 0!! = 1.
BigInt double_factorial(int n);

}  // namespace gbslxe

#endif
