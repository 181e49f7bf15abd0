// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>
#include <vector>

namespace qforce::detail {

struct EmbeddedBasis {
  std::string_view name;
  std::string_view file;
  std::string_view text;
};

const std::vector<EmbeddedBasis>& embedded_bases();

// "NAME FILE FNV1A64" per line, written by data/basis/export_basis.py.
std::string_view embedded_basis_manifest();

}  // namespace qforce::detail
