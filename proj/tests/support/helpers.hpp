#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "wvg/error.hpp"

/// Expects `expr` to throw wvg::Error with the given code.
#define CHECK_FAILS_WITH(expr, expected_code)                    \
  do {                                                           \
    bool threw_ = false;                                         \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const wvg::Error& e_) {                             \
      threw_ = true;                                             \
      CHECK(e_.code() == (expected_code));                       \
    }                                                            \
    CHECK(threw_);                                               \
  } while (0)
