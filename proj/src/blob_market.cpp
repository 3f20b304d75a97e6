// rollup-lab: Rollup fee-mechanism attack simulator
// Copyright 2026 The rollup-lab Authors.
// SPDX-License-Identifier: Apache-2.0

#include <rollup_lab/blob_market.hpp>
#include <rollup_lab/error.hpp>
#include <algorithm>
#include <cmath>

namespace rollup_lab
{
BlobMarket::BlobMarket(const L1Params& l1, bool others_fill)
  : m_params{l1}, m_others_fill{others_fill}, m_price{l1.rho_blob_0}
{
    validate(l1);
}

void BlobMarket::step(double blobs_posted)
{
    if (blobs_posted < 0)
        throw Error{ErrorKind::invalid_argument, "blobs_posted must be non-negative"};

    const bool saturated = m_others_fill ? blobs_posted >= 1 : blobs_posted > m_params.blob_target;
    if (saturated)
        m_price *= m_params.u_blob;
    else if (blobs_posted == 0)
    {
        switch (m_params.decay)
        {
        case DecayRule::inverse:
            m_price /= m_params.u_blob;
            break;
        case DecayRule::fixed:
            m_price *= m_params.decay_fixed_factor;
            break;
        case DecayRule::off:
            break;
        }
    }
    m_price = std::max(m_price, m_params.blob_floor);
    m_history.push_back(m_price);
}

Money BlobMarket::delayed_view(std::uint32_t d) const noexcept
{
    if (d == 0)
        return m_price;
    const auto steps = m_history.size();
    if (steps <= d)
        return initial_price();
    return m_history[steps - d - 1];
}

Money closed_form_price(const L1Params& l1, double k)
{
    if (k < 0)
        throw Error{ErrorKind::invalid_argument, "block count must be non-negative"};
    return l1.rho_blob_0 * std::pow(l1.u_blob, k);
}
}  // namespace rollup_lab
