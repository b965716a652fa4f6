// Copyright 2026 The dld Authors
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

#include "dld/action.hpp"
#include "dld/config.hpp"
#include "dld/effect.hpp"
#include "dld/error.hpp"
#include "dld/linkage.hpp"
#include "dld/meadow.hpp"
#include "dld/reclaim.hpp"
#include "dld/refine.hpp"
#include "dld/script.hpp"
#include "dld/service.hpp"
#include "dld/set_model.hpp"
#include "dld/term.hpp"
#include "dld/text.hpp"
#include "dld/thread.hpp"
#include "dld/universe.hpp"
