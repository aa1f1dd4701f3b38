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

#include "gapchamp/error.hpp"

namespace gapchamp {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Range: return "range";
        case ErrorKind::Argument: return "argument";
        case ErrorKind::Resource: return "resource";
        case ErrorKind::Precision: return "precision";
        case ErrorKind::Checkpoint: return "checkpoint";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

}  // namespace gapchamp
