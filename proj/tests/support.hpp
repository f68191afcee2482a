#pragma once

#include "ulab/error.hpp"

#include <gtest/gtest.h>

// Expects `stmt` to throw ulab::Error carrying `errc`.
#define EXPECT_ERRC(stmt, errc)                          \
  EXPECT_THROW(                                          \
      {                                                  \
        try {                                            \
          stmt;                                          \
        } catch (const ::ulab::Error& error_) {          \
          EXPECT_EQ(error_.code(), errc) << error_.what(); \
          throw;                                         \
        }                                                \
      },                                                 \
      ::ulab::Error)
