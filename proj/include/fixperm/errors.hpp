#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fixperm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: duplicate entries, bad pattern text, negative indices.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A request exceeded a configured size cap (oracle or generator).
class ResourceLimit : public Error {
 public:
  ResourceLimit(const std::string& what, std::size_t cap) : Error(what), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// No structural construction exists for the requested pattern set.
class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

}  // namespace fixperm
