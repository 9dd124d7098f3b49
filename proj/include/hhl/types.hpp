// Copyright 2026 The hhl authors
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

#ifndef HHL_TYPES_HPP
#define HHL_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace hhl {

using cdouble = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Post-selecting on an outcome of probability zero.
class ImpossibleOutcome : public Error {
 public:
  ImpossibleOutcome() : Error("impossible-outcome") {}
};

// A x = b has a (numerically) zero eigenvalue.
class SingularSystem : public Error {
 public:
  SingularSystem() : Error("singular-system") {}
};

}  // namespace hhl

#endif  // HHL_TYPES_HPP
