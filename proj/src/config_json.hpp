// Copyright 2026 The qforce Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include "qforce/config.hpp"

namespace qforce::detail {

EngineConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_as_json(const EngineConfig& cfg);

}  // namespace qforce::detail
