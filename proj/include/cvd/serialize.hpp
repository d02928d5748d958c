// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>

#include "cvd/conflict.hpp"
#include "cvd/remap.hpp"

namespace cvd {

/// Fixed two-decimal formatting used for every real in reports and plans.
std::string format_real(double x);

std::string conflicts_to_json(std::span<const ConflictReport> reports);
std::string plan_to_json(const RemapPlan& plan);

/// Human-readable table, one line per report.
std::string conflicts_to_text(std::span<const ConflictReport> reports);

}  // namespace cvd
