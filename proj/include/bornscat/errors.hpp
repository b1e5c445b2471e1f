//---------------------------------------------------------------------------//
// Copyright 2026 the bornscat developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file bornscat/errors.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace bornscat
{

//! Input outside the mathematical domain of an operation (exit code 2).
class domain_error : public std::domain_error
{
  public:
    explicit domain_error(const std::string& what)
        : std::domain_error(what)
    {
    }
};

//! A numerical scheme failed to reach its requested tolerance (exit code 3).
class convergence_error : public std::runtime_error
{
  public:
    explicit convergence_error(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

}  // namespace bornscat
