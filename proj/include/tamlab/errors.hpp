#pragma once

#include <stdexcept>
#include <string>

namespace tamlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (group specs, elements, cycle notation).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A configured resource cap was hit.
class CapExceeded : public Error {
public:
  using Error::Error;
};

class OrderCapExceeded : public CapExceeded {
public:
  using CapExceeded::CapExceeded;
};

class EnumerationCapExceeded : public CapExceeded {
public:
  using CapExceeded::CapExceeded;
};

class InvalidPermutation : public Error {
public:
  using Error::Error;
};

class NotASubgroup : public Error {
public:
  using Error::Error;
};

class ElementNotInGroup : public Error {
public:
  using Error::Error;
};

class GroupMismatch : public Error {
public:
  using Error::Error;
};

class LatticeMismatch : public Error {
public:
  using Error::Error;
};

/// A marks vector outside the image of the ghost map.
class NotIntegral : public Error {
public:
  using Error::Error;
};

class LevelMismatch : public Error {
public:
  using Error::Error;
};

class ElementNotInCarrier : public Error {
public:
  using Error::Error;
};

} // namespace tamlab
