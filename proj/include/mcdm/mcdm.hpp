// Copyright 2026 The mcdm-rank Authors.
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

#ifndef MCDM_MCDM_HPP_
#define MCDM_MCDM_HPP_

#include "mcdm/csv.hpp"
#include "mcdm/error.hpp"
#include "mcdm/fuzzy.hpp"
#include "mcdm/metrics.hpp"
#include "mcdm/profile.hpp"
#include "mcdm/text.hpp"
#include "mcdm/topsis.hpp"
#include "mcdm/weighting.hpp"

namespace mcdm {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace mcdm

#endif  // MCDM_MCDM_HPP_
