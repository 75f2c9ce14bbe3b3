// Copyright 2026 The mgn Authors
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

#include "mgn/bernoulli.hpp"
#include "mgn/census.hpp"
#include "mgn/dualgraph.hpp"
#include "mgn/eulerchi.hpp"
#include "mgn/interpolate.hpp"
#include "mgn/intersection.hpp"
#include "mgn/levels.hpp"
#include "mgn/linalg.hpp"
#include "mgn/pipeline.hpp"
#include "mgn/polynomial.hpp"
#include "mgn/quasipoly.hpp"
#include "mgn/rational.hpp"
#include "mgn/recursion.hpp"
#include "mgn/series.hpp"
#include "mgn/statesum.hpp"
#include "mgn/store.hpp"
#include "mgn/table_data.hpp"
#include "mgn/verify.hpp"
