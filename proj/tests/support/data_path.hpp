#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace testing_support {

inline std::string read_data(const std::string& relative) {
  const std::string path = std::string(COXLAB_TEST_DATA_DIR) + "/" + relative;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing test data " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testing_support
