// Copyright 2026 The mqsym Authors
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

#pragma once

namespace mqsym {

// Default thresholds. Every operation that compares against one of these
// takes an explicit override argument.
inline constexpr double kNormTol = 1e-9;
inline constexpr double kHermTol = 1e-9;
inline constexpr double kPureTol = 1e-9;
inline constexpr double kZeroTol = 1e-12;
inline constexpr double kEquipollenceTol = 1e-8;

}  // namespace mqsym
