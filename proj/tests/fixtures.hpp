#pragma once

#include <string>

#include "tropfiber/io.hpp"
#include "tropfiber/polytope.hpp"

namespace fixtures {

using namespace tropfiber;

inline std::string data_path(const std::string& name) { return std::string(TROPFIBER_DATA_DIR) + "/" + name; }

inline Polytope load(const std::string& name, const Params& params = {}) {
  return load_polytope(data_path(name), params);
}

inline Polytope cp2() { return load("cp2.json"); }
inline Polytope ex2() { return load("blowup2a.json"); }
inline Polytope ex3() { return load("blowup2b.json"); }
inline Polytope blowup1(const Rational& c) { return load("blowup1.json", {{"c", c}}); }

inline Rational q(long a, long b = 1) { return Rational(a, b); }
inline RatVector pt(const Rational& a, const Rational& b) { return {a, b}; }
inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace fixtures
