#pragma once

#include <stdexcept>
#include <string>

namespace akh {

// Bad input or parameters the mathematics rejects (poles, singular
// specializations, out-of-range shapes).  CLI exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An identity that must hold failed.  Indicates an engine bug.  CLI exit code 2.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw ConsistencyError(what);
}

}  // namespace akh
