// Copyright 2026 The cqed-dit Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace cqed {

/// Base class of every error raised by the library. `name()` is the stable
/// identifier written into reports and summary tables.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define CQED_DEFINE_ERROR(Type)                                      \
  class Type : public Error {                                        \
   public:                                                           \
    explicit Type(const std::string& what) : Error(#Type, what) {}   \
  }

CQED_DEFINE_ERROR(InvalidParameter);
CQED_DEFINE_ERROR(DimensionMismatch);
CQED_DEFINE_ERROR(SingularMatrix);
CQED_DEFINE_ERROR(DegenerateSteadyState);
CQED_DEFINE_ERROR(PumpExceedsDecay);
CQED_DEFINE_ERROR(PositivityViolation);
CQED_DEFINE_ERROR(TruncationNotConverged);
CQED_DEFINE_ERROR(ResolventSingular);
CQED_DEFINE_ERROR(NegativeSpectrum);
CQED_DEFINE_ERROR(SingularMomentSystem);
CQED_DEFINE_ERROR(NoDITStructure);
CQED_DEFINE_ERROR(ZeroDetuning);
CQED_DEFINE_ERROR(GridMismatch);

#undef CQED_DEFINE_ERROR

}  // namespace cqed
