#pragma once

#include <string>

#include "qkflag/render.hpp"

namespace test_support {

inline std::string data_path(const std::string& name) { return std::string(QKFLAG_TEST_DATA) + "/" + name; }

inline qkflag::MultiplicationTable golden_table(int n) {
  return qkflag::load_table(data_path("table_n" + std::to_string(n) + ".json"));
}

}  // namespace test_support
