// Copyright 2026 The Authors.
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

#ifndef BIASFORGE_BIASFORGE_HPP_
#define BIASFORGE_BIASFORGE_HPP_

#include "biasforge/core.hpp"
#include "biasforge/multigraph.hpp"
#include "biasforge/bias.hpp"
#include "biasforge/matroid.hpp"
#include "biasforge/frame_matroid.hpp"
#include "biasforge/representations.hpp"
#include "biasforge/transforms.hpp"
#include "biasforge/analysis.hpp"
#include "biasforge/census.hpp"
#include "biasforge/document.hpp"
#include "biasforge/fixtures.hpp"

#endif  // BIASFORGE_BIASFORGE_HPP_
