// Copyright 2026 The dconv Authors
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

// JSON encoders shared by io.cpp and the lab. Not installed.

#ifndef DCONV_SRC_CODEC_HPP_
#define DCONV_SRC_CODEC_HPP_

#include "json.hpp"

#include "dconv/classes.hpp"
#include "dconv/lattice.hpp"
#include "dconv/network.hpp"
#include "dconv/ops.hpp"

namespace dconv::codec {

using Json = nlohmann::json;

Json encode(const LatticeSet& s);
Json encode(const LatticeFn& f);
Json encode(const Network& net);
Json encode(const SplitSpec& spec);
Json encode(const PartitionSpec& spec);
Json encode(const Window& w);
Json encode(const Witness& w);

}  // namespace dconv::codec

#endif  // DCONV_SRC_CODEC_HPP_
