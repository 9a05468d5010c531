#pragma once

#include "borwein/real.hpp"

#include <string>

namespace borwein {

enum class Method { direct, accelerated, integral };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::accelerated: return "accelerated";
    case Method::integral: return "integral";
  }
  return "?";
}

/// Value with an error estimate; every numeric evaluator returns one.
struct SeriesResult {
  Real value;
  Real err_estimate;
  long terms_used = 0;
  Method method = Method::direct;
};

}  // namespace borwein
