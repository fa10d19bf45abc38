// Copyright 2026 The catseg Authors.
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

#ifndef CATSEG_BASELINES_H_
#define CATSEG_BASELINES_H_

#include "catseg/document.h"
#include "catseg/vertical.h"

namespace catseg {

// A boundary before every coordinating conjunction (tag CC). No guards and
// no verb requirement.
SegmentedDocument CoordinationBaseline(const VerticalDocument &doc);

// Every sentence is one segment.
SegmentedDocument SentenceBaseline(const VerticalDocument &doc);

}  // namespace catseg

#endif  // CATSEG_BASELINES_H_
