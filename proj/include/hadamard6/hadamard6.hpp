// Copyright 2026 The hadamard6 Authors
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

#include "hadamard6/compose.hpp"
#include "hadamard6/equivalence.hpp"
#include "hadamard6/error.hpp"
#include "hadamard6/families.hpp"
#include "hadamard6/fingerprint.hpp"
#include "hadamard6/io.hpp"
#include "hadamard6/matrix.hpp"
#include "hadamard6/search.hpp"
