// Copyright 2026 The dcmkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DCM_DCM_HPP
#define DCM_DCM_HPP

#include "dcm/error.hpp"
#include "dcm/graph.hpp"
#include "dcm/matrix.hpp"
#include "dcm/random.hpp"
#include "dcm/recognizer.hpp"
#include "dcm/reduction.hpp"
#include "dcm/screening.hpp"
#include "dcm/sequences.hpp"

#endif  // DCM_DCM_HPP
