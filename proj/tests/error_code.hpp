#pragma once

#include <optional>

#include "primegraph/error.hpp"

// Code of the GraphError thrown by f, or nullopt when it returns normally.
template <class F>
std::optional<primegraph::ErrorCode> error_code_of(F&& f) {
  try {
    f();
  } catch (const primegraph::GraphError& e) {
    return e.code();
  }
  return std::nullopt;
}
