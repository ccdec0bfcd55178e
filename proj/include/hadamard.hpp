// Copyright 2026 The mubhadamard Authors
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

#ifndef HADAMARD_HADAMARD_HPP
#define HADAMARD_HADAMARD_HPP

#include "hadamard/analyze.hpp"
#include "hadamard/catalog.hpp"
#include "hadamard/construct.hpp"
#include "hadamard/cyclotomic.hpp"
#include "hadamard/defect.hpp"
#include "hadamard/equivalence.hpp"
#include "hadamard/errors.hpp"
#include "hadamard/haagerup.hpp"
#include "hadamard/io.hpp"
#include "hadamard/matrix.hpp"
#include "hadamard/modular.hpp"
#include "hadamard/mub.hpp"
#include "hadamard/parallel.hpp"

#endif  // HADAMARD_HADAMARD_HPP
