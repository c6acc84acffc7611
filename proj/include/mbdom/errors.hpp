#pragma once

#include <stdexcept>
#include <string>

namespace mbdom {

// Malformed textual input: edge lists, generator specs, CLI arguments.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// An operation would exceed a configured size or memory cap.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mbdom
