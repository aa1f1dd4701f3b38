// Copyright 2026 The gapchamp Authors
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

#include <stdexcept>
#include <string>

namespace gapchamp {

enum class ErrorKind {
    Domain,      // input outside the mathematical domain (e.g. x < 3 for gaps)
    Range,       // index or value outside a representable / addressable range
    Argument,    // malformed argument (unsorted list, d' >= d, non-prime p)
    Resource,    // request exceeds a configured cap
    Precision,   // interval evaluation too wide to decide
    Checkpoint,  // corrupt or mismatched checkpoint file
    Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace gapchamp
