// Copyright 2025 The Authors.
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

#ifndef MATROID1D_ERRORS_HPP_
#define MATROID1D_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace matroid1d {

enum class Errc {
  ok = 0,
  empty_complex,
  ghost_vertex,
  vertex_out_of_range,
  empty_restriction,
  not_a_face,
  bad_skeleton_dim,
  too_large,
  wrong_dim,
  not_matroid,
  bad_count,
  malformed_hvector,
  not_squarefree,
  dim_too_high,
  not_artinian,
  overflow,
  assertion_failure,
  bad_input,
  internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace matroid1d

#endif  // MATROID1D_ERRORS_HPP_
