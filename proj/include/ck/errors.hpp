#pragma once

#include <stdexcept>
#include <string>

namespace ck {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Laurent arithmetic produced an exponent below the window floor.
struct PoleOverflow : Error {
  explicit PoleOverflow(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// Generator set is not closed under the coproduct.
struct NotClosed : Error {
  explicit NotClosed(const std::string& what) : Error(what) {}
};

struct NotNilpotent : Error {
  explicit NotNilpotent(const std::string& what) : Error(what) {}
};

struct AlgebraMismatch : Error {
  explicit AlgebraMismatch(const std::string& what) : Error(what) {}
};

struct NotLocal : Error {
  explicit NotLocal(const std::string& what) : Error(what) {}
};

struct NotHolomorphicBeta : Error {
  explicit NotHolomorphicBeta(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace ck
