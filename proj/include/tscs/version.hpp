// Copyright 2026 The tscs Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace tscs {

inline constexpr const char* version = "0.1.0";

}  // namespace tscs
