#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef HEFFTER_DATA_DIR
#define HEFFTER_DATA_DIR "tests/data"
#endif

namespace testsupport {

inline std::string data_path(const std::string& name) {
    return std::string(HEFFTER_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("missing test file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace testsupport
