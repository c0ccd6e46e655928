#pragma once

#include <gtest/gtest.h>

#include <initializer_list>
#include <vector>

#include "partcx/error.hpp"
#include "partcx/partition.hpp"

namespace partcx::test {

inline Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

inline Corner rem(int row, int col) { return {row, col, CornerKind::removable}; }
inline Corner add(int row, int col) { return {row, col, CornerKind::addable}; }

template <class F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorKind::invalid_argument;
}

}  // namespace partcx::test
