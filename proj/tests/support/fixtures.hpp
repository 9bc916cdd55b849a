#pragma once

#include <string>

namespace testutil {

inline std::string data_path(const std::string& name) {
  return std::string(IQEB_DATA_DIR) + "/" + name;
}

}  // namespace testutil
