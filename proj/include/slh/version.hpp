// Copyright (c) 2026 The slh-netsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace slh {

inline constexpr const char* kToolName = "slh-netsim";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace slh
