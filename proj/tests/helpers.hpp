#pragma once

#include <memory>
#include <random>
#include <string>

#include "wgalg/coxeter.hpp"

inline wgalg::CoxeterPtr system_of(const std::string& name) {
  return std::make_shared<const wgalg::CoxeterSystem>(wgalg::parse_coxeter(name));
}

inline std::string read_file(const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return {};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  std::fclose(f);
  return out;
}

inline std::string data_path(const std::string& rel) {
  return std::string(WGALG_TEST_DATA) + "/" + rel;
}
