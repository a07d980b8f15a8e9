#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metriclab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `offset` is the byte offset of the offending
// character within the record being parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// The instance exceeds a configured desk-scale cap. Exact searches refuse
// rather than approximate.
class InstanceTooLarge : public Error {
 public:
  InstanceTooLarge(const std::string& what, long long size, long long cap)
      : Error(what + ": size " + std::to_string(size) + " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}
  long long size() const { return size_; }
  long long cap() const { return cap_; }

 private:
  long long size_;
  long long cap_;
};

// An operation was called outside its domain (disconnected graph, non-tree,
// out-of-range parameter, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace metriclab
