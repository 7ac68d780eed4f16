#include "rsbf/monomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rsbf/errors.hpp"

namespace rsbf {

MonomialPattern::MonomialPattern(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw InvalidInput("monomial pattern must be nonempty");
  if (indices_.front() < 1) throw InvalidInput("monomial indices must be >= 1");
  for (std::size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i] <= indices_[i - 1]) {
      throw InvalidInput("monomial indices must be strictly increasing: " + to_string());
    }
  }
}

std::uint64_t MonomialPattern::mask() const {
  if (top() > 64) throw InvalidInput("monomial index exceeds 64: " + to_string());
  std::uint64_t m = 0;
  for (int i : indices_) m |= std::uint64_t{1} << (i - 1);
  return m;
}

std::string MonomialPattern::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) out << ',';
    out << indices_[i];
  }
  return out.str();
}

RSFunctionSpec::RSFunctionSpec(std::vector<MonomialPattern> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw InvalidInput("at least one generator is required");
  std::set<MonomialPattern> seen;
  int linear = 0;
  for (const auto& g : generators_) {
    if (g.front() != 1) {
      throw InvalidInput("generating monomial " + g.to_string() + " must begin with 1");
    }
    if (!seen.insert(g).second) throw InvalidInput("duplicate generator " + g.to_string());
    if (g.is_linear()) ++linear;
  }
  if (linear > 1) throw InvalidInput("at most one linear generator is allowed");
}

int RSFunctionSpec::max_top() const {
  int top = 0;
  for (const auto& g : generators_) top = std::max(top, g.top());
  return top;
}

int RSFunctionSpec::linear_count() const {
  return static_cast<int>(std::count_if(generators_.begin(), generators_.end(),
                                        [](const MonomialPattern& g) { return g.is_linear(); }));
}

std::string RSFunctionSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ';';
    out += generators_[i].to_string();
  }
  return out;
}

}  // namespace rsbf
