// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace rollup_lab
{
/// Shortest decimal text that round-trips to the same double.
std::string format_number(double v);

/// Fixed-point text with the given number of decimals.
std::string format_fixed(double v, int decimals);
}  // namespace rollup_lab
