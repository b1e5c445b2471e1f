//---------------------------------------------------------------------------//
// Copyright 2026 the bornscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bornscat/kinematics.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace bornscat
{
//---------------------------------------------------------------------------//
/*!
 * Elastic-scattering kinematics in natural units.
 *
 * All quantities are in Planck natural units: momenta and masses carry
 * dimension of inverse length, amplitudes carry dimension of length.  There
 * is no unit-conversion layer; the CLI converts degrees to radians once at
 * the boundary.
 */
struct Kinematics
{
    double p{};      //!< momentum magnitude, > 0 (inverse length)
    double theta{};  //!< scattering angle in radians, in [0, pi]
};

//---------------------------------------------------------------------------//
//! Validate a Kinematics value; throws domain_error on violation.
inline void validate(const Kinematics& k)
{
    if (!(k.p > 0))
    {
        throw domain_error("kinematics: momentum p must be > 0");
    }
    if (!(k.theta >= 0 && k.theta <= std::numbers::pi))
    {
        throw domain_error("kinematics: angle theta must lie in [0, pi]");
    }
}

//---------------------------------------------------------------------------//
/*!
 * Momentum-transfer magnitude for elastic scattering.
 *
 * q = 2 p sin(theta/2), equivalent to sqrt(2 p^2 (1 - cos theta)).  The
 * half-angle form is used because it is well conditioned over the whole
 * angular range; the identity form loses digits near theta = 0.
 */
inline double momentum_transfer(const Kinematics& k)
{
    validate(k);
    return 2 * k.p * std::sin(0.5 * k.theta);
}

//! Convenience overload.
inline double momentum_transfer(double p, double theta)
{
    return momentum_transfer(Kinematics{p, theta});
}

//---------------------------------------------------------------------------//
/*!
 * Invert q = 2 p sin(theta/2) for table generation.
 *
 * Requires 0 <= q <= 2p.  The round trip momentum_transfer(p, angle_from_q(p,
 * q)) recovers q to within 1e-14 relative: asin is well conditioned as a map
 * from q, even immediately below the backscattering endpoint q = 2p.
 */
inline double angle_from_q(double p, double q)
{
    if (!(p > 0))
    {
        throw domain_error("kinematics: momentum p must be > 0");
    }
    if (!(q >= 0 && q <= 2 * p))
    {
        throw domain_error(
            "kinematics: momentum transfer q must lie in [0, 2p]");
    }
    return 2 * std::asin(q / (2 * p));
}

}  // namespace bornscat
