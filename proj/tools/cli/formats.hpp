// Copyright 2026 The tamewild Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tamewild/matrix.hpp"
#include "tamewild/ncpoly.hpp"

namespace tamewild::cli {

// Matrix file:
//   p n m a
//   followed by a blocks of n lines of m integers (reduced mod p).
// Transform file:
//   p a b
//   followed by b polynomial lines, e.g. "1*x1x2+4*x2x1" or "2*1".
// Lines starting with '#' and blank lines are ignored in both.

struct MatrixFile {
  PrimeField field;
  std::size_t rows;
  std::size_t cols;
  std::vector<Matrix> matrices;
};

MatrixFile parse_matrix_file(std::istream& in, const std::string& source);
MatrixFile read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(std::ostream& out, const std::vector<Matrix>& matrices);
void write_matrix_file(std::ostream& out, const MatrixTuple& tuple);

/// One polynomial line in variables x1..x_arity.
NcPoly parse_nc_poly(std::string_view text, std::size_t arity, PrimeField field);

Transform parse_transform_file(std::istream& in, const std::string& source);
Transform read_transform_file(const std::filesystem::path& path);
void write_transform_file(std::ostream& out, const Transform& transform);

}  // namespace tamewild::cli
