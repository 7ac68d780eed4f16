#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "rsbf/monomial.hpp"
#include "rsbf/truth_table.hpp"

namespace testing_support {

inline rsbf::MonomialPattern pattern(const oracle::IndexSet& p) { return rsbf::MonomialPattern(p); }

inline rsbf::RSFunctionSpec spec(const std::vector<oracle::IndexSet>& gens) {
  std::vector<rsbf::MonomialPattern> out;
  for (const auto& g : gens) out.emplace_back(g);
  return rsbf::RSFunctionSpec(std::move(out));
}

inline oracle::Bits bits(const rsbf::TruthTable& t) {
  oracle::Bits out(t.size());
  for (std::uint64_t j = 0; j < t.size(); ++j) out[j] = t[j] ? 1 : 0;
  return out;
}

inline rsbf::TruthTable table(const oracle::Bits& b) {
  std::string s;
  for (int x : b) s += x ? '1' : '0';
  return rsbf::TruthTable::from_string(s);
}

inline std::string str(const oracle::IndexSet& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace testing_support
