#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

inline std::string read_golden(const std::string& name) {
  std::ifstream f(std::string(HODGE_GOLDEN_DIR) + "/" + name);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

// Non-empty, non-comment lines.
inline std::vector<std::string> golden_lines(const std::string& name) {
  std::vector<std::string> out;
  std::istringstream in(read_golden(name));
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}
