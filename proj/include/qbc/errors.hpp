#pragma once

#include <stdexcept>
#include <string>

namespace qbc {

// Bad experiment or protocol configuration (unsampleable family, strategy
// incompatible with the chosen game, malformed config file).
class InvalidConfig : public std::runtime_error {
 public:
  explicit InvalidConfig(const std::string& what) : std::runtime_error(what) {}
};

// A message violates the protocol contract (wrong shape, wrong phase order).
class ProtocolViolation : public std::runtime_error {
 public:
  explicit ProtocolViolation(const std::string& what) : std::runtime_error(what) {}
};

// Requested system size exceeds the desk-scale cap.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qbc
