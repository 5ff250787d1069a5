// Copyright 2026 The hoopforge Authors
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

// Everything in one include.
#include "hoopforge/error.hpp"
#include "hoopforge/table.hpp"
#include "hoopforge/hoop.hpp"
#include "hoopforge/term.hpp"
#include "hoopforge/text_format.hpp"
#include "hoopforge/morphology.hpp"
#include "hoopforge/enumerate.hpp"
#include "hoopforge/extension.hpp"
#include "hoopforge/report.hpp"
#include "hoopforge/action.hpp"
#include "hoopforge/correspondence.hpp"
#include "hoopforge/lalgebra.hpp"
#include "hoopforge/corpus.hpp"
#include "hoopforge/parallel.hpp"
