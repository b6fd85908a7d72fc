/*
   Copyright 2026 The recip Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Umbrella header. serialize.hpp is separate since it needs nlohmann/json.

#ifndef RECIP_RECIP_HPP
#define RECIP_RECIP_HPP

#include "detline.hpp"
#include "ff.hpp"
#include "laurent.hpp"
#include "linalg.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "ratfun.hpp"
#include "seqspace.hpp"
#include "symbols.hpp"

#endif  // RECIP_RECIP_HPP
