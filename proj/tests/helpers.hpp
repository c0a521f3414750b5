#pragma once

#include <doctest.h>

#include <optional>

#include "qci/error.hpp"

namespace qci::testing {

// Run fn and report which error code it threw, if any.
template <typename Fn>
std::optional<Err> code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace qci::testing

#define CHECK_FAILS(code, ...) \
  CHECK(qci::testing::code_of([&] { (void)(__VA_ARGS__); }) == code)
