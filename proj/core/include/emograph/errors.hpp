// Copyright 2026 The Emograph Authors
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

#ifndef EMOGRAPH_ERRORS_HPP_
#define EMOGRAPH_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace emograph {

// Invalid argument values: bad probabilities, unknown nodes, negative counts.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A violated operation precondition: wrong graph kind, empty input where a
// nonempty one is required, degenerate task.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed input document (graph file, record file, script, model file).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Filesystem failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Missing or inconsistent runtime configuration (endpoints, env vars).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Transport or status failure reported by a generation provider.
class ProviderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace emograph

#endif  // EMOGRAPH_ERRORS_HPP_
