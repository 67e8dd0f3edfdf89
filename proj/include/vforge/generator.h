//
// Copyright 2026 The VForge Authors
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
//

#ifndef VFORGE_GENERATOR_H_
#define VFORGE_GENERATOR_H_

#include <cstddef>
#include <string>

namespace vforge {

struct SamplingParams {
  double temperature = 1.0;
  std::size_t top_k = 40;
};

struct GeneratorRequest {
  std::string prompt;
  std::size_t max_sentences = 1;
  double temperature = 1.0;
  std::size_t top_k = 40;

  // Throws kBadConfig unless max_sentences >= 1 and temperature > 0.
  void Validate() const;
};

// Text continuation source. An empty result is allowed; callers decide what
// it means.
class Generator {
 public:
  virtual ~Generator() = default;
  virtual std::string Generate(const GeneratorRequest& request) = 0;
};

}  // namespace vforge

#endif  // VFORGE_GENERATOR_H_
