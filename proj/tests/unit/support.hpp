#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "graev/io.hpp"

#ifndef GRAEV_FIXTURES_DIR
#define GRAEV_FIXTURES_DIR "fixtures"
#endif

namespace support {

inline std::string fixture_path(const std::string& relative) { return std::string(GRAEV_FIXTURES_DIR) + "/" + relative; }

inline graev::PointedSpace fixture_space(const std::string& name) {
  const std::string path = fixture_path("spaces/" + name);
  return graev::io::space_from_json(graev::io::read_json_file(path), path);
}

inline graev::Word word(const graev::PointedSpace& space, std::initializer_list<std::pair<const char*, std::int64_t>> terms) {
  graev::Word w(space.size(), space.basepoint());
  for (const auto& [name, k] : terms) w.add(space.index_of(name), k);
  return w;
}

inline graev::LinComb lincomb(const graev::PointedSpace& space,
                              std::initializer_list<std::pair<const char*, graev::Rational>> terms) {
  graev::LinComb v(space.size(), space.basepoint());
  for (const auto& [name, q] : terms) v.add(space.index_of(name), q);
  return v;
}

inline graev::Rational q(long num, unsigned long den = 1) {
  graev::Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace support
