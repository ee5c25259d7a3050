// Copyright 2026 The posmap Authors
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

#include "posmap/block.hpp"
#include "posmap/catalog.hpp"
#include "posmap/claims.hpp"
#include "posmap/det.hpp"
#include "posmap/errors.hpp"
#include "posmap/falsifier.hpp"
#include "posmap/io.hpp"
#include "posmap/maps.hpp"
#include "posmap/matrix.hpp"
#include "posmap/properties.hpp"
#include "posmap/random.hpp"
#include "posmap/spectral.hpp"
#include "posmap/suite.hpp"
#include "posmap/tolerance.hpp"
