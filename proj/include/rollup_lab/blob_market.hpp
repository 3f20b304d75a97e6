// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "config.hpp"
#include <cstdint>
#include <vector>

namespace rollup_lab
{
/// L1 blob base fee under the threshold rule: up by u_blob when more than the
/// target is posted, down when nothing is, unchanged otherwise.
class BlobMarket
{
public:
    /// With `others_fill` set, any non-empty posting saturates the block.
    explicit BlobMarket(const L1Params& l1, bool others_fill = false);

    void step(double blobs_posted);

    [[nodiscard]] Money current_price() const noexcept { return m_price; }
    [[nodiscard]] Money initial_price() const noexcept { return m_params.rho_blob_0; }
    [[nodiscard]] const std::vector<Money>& history() const noexcept { return m_history; }
    [[nodiscard]] const L1Params& params() const noexcept { return m_params; }
    [[nodiscard]] bool others_fill() const noexcept { return m_others_fill; }

    /// Price from d steps ago; the initial price while fewer than d steps exist.
    [[nodiscard]] Money delayed_view(std::uint32_t d) const noexcept;

private:
    L1Params m_params;
    bool m_others_fill;
    Money m_price;
    std::vector<Money> m_history;
};

/// rho_blob_0 * u^k.
Money closed_form_price(const L1Params& l1, double k);
}  // namespace rollup_lab
