#pragma once

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "exbetti/json_io.hpp"

namespace support {

inline std::string fixture_path(const std::string& name) {
  return std::string(EXBETTI_FIXTURE_DIR) + "/" + name;
}

inline exbetti::Json load_fixture(const std::string& name) {
  std::ifstream file(fixture_path(name));
  std::ostringstream buf;
  buf << file.rdbuf();
  return exbetti::parse_json(buf.str());
}

inline exbetti::Monomial mono(const std::string& text, int n) { return exbetti::parse_monomial(text, n); }

inline exbetti::MonomialIdeal ideal(int n, std::initializer_list<const char*> gens) {
  std::vector<exbetti::Monomial> out;
  for (const char* g : gens) out.push_back(mono(g, n));
  return exbetti::MonomialIdeal::minimalize(n, out);
}

inline std::vector<exbetti::Monomial> monos(int n, std::initializer_list<const char*> gens) {
  std::vector<exbetti::Monomial> out;
  for (const char* g : gens) out.push_back(mono(g, n));
  return out;
}

inline exbetti::CornerSpec spec(int n, std::vector<exbetti::Corner> corners, std::vector<exbetti::Count> values) {
  exbetti::CornerSpec s;
  s.n = n;
  s.corners = std::move(corners);
  s.values = std::move(values);
  return s;
}

}  // namespace support
