#pragma once

#include <stdexcept>
#include <string>

namespace skorokhod {

// File could not be read or written.
struct io_error : std::runtime_error {
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// A distribution spec, map file, or argument combination is invalid.
struct spec_error : std::runtime_error {
  explicit spec_error(const std::string& what) : std::runtime_error(what) {}
};

// An energy series was diagnosed as divergent where a finite value is required.
struct divergence_error : std::runtime_error {
  explicit divergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace skorokhod
