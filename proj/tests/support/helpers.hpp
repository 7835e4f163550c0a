#pragma once

#include <string_view>
#include <vector>

#include "ncode/ncode.hpp"

namespace testing_helpers {

// "134" -> {1,3,4}; digits only.
inline ncode::Codeword w(std::string_view digits) {
  ncode::Codeword c;
  for (char ch : digits) c.insert(ch - '0');
  return c;
}

inline std::vector<ncode::Codeword> ws(std::initializer_list<std::string_view> items) {
  std::vector<ncode::Codeword> out;
  for (auto s : items) out.push_back(w(s));
  return out;
}

inline ncode::NeuralCode code(std::string_view text) { return ncode::parse_code(text); }

inline const char* const kC22 = "134,1357,257,356,13,35,57";
inline const char* const kC24 = "123,1246,145,356,12,14,3,5,6";
inline const char* const kC18a = "345,234,356,12,34,35,2";
inline const char* const kC18b = "123,1346,145,67,13,14,6";
inline const char* const kWheelTable = "123,145,246,1356,13,15,2,4,6";
inline const char* const kD28 = "1237,12467,1457,3567,127,147,37,57,67";
inline const char* const kC26 = "123,134,145,2345,13,14,23,34,45,4,5";

}  // namespace testing_helpers
