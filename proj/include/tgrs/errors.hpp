#pragma once

#include <stdexcept>
#include <string>

namespace tgrs {

struct Error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

// Caller violated an API contract: wrong shape, index out of range, elements
// from different fields.
struct UsageError : Error
{
  using Error::Error;
};

// A mathematical precondition failed (zero inverse, singular matrix).
struct DomainError : Error
{
  using Error::Error;
};

struct DivisionByZero : DomainError
{
  using DomainError::DomainError;
};

// Parameters do not describe a valid field, code, or construction.
struct ConstructionError : Error
{
  using Error::Error;
};

struct ResourceLimit : Error
{
  using Error::Error;
};

} // namespace tgrs
