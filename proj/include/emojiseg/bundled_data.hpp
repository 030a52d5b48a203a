// Copyright 2026 The emojiseg Authors. All Rights Reserved.
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

#ifndef EMOJISEG_BUNDLED_DATA_HPP_
#define EMOJISEG_BUNDLED_DATA_HPP_

#include <string_view>

// Contents of the files under data/, embedded at build time.
namespace emojiseg::bundled {

std::string_view emoji_properties();
std::string_view emoji_sentiment();
std::string_view emoji_pos();
std::string_view word_valence();

}  // namespace emojiseg::bundled

#endif  // EMOJISEG_BUNDLED_DATA_HPP_
