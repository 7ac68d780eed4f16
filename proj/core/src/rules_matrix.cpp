#include "rsbf/rules_matrix.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

#include "rsbf/actions.hpp"
#include "rsbf/errors.hpp"

namespace rsbf {

namespace {

std::uint64_t low_bits(int width) { return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1; }

}  // namespace

StateLayout::StateLayout(const RSFunctionSpec& spec) {
  for (const auto& g : spec.generators()) {
    if (g.is_linear()) {
      ++linear_count_;
      continue;
    }
    width_ += g.top() - 1;
  }
  if (width_ > 62) throw BudgetExceeded("operation state width exceeds 62 bits");
  int shift = width_;
  for (const auto& g : spec.generators()) {
    if (g.is_linear()) continue;
    const int width = g.top() - 1;
    shift -= width;
    std::uint64_t breaks = 0;
    for (int v : break_levels(g)) breaks |= std::uint64_t{1} << (g.top() - v);
    fields_.push_back({g, shift, width, breaks});
  }
}

std::vector<int> StateLayout::levels(OperationState state, std::size_t g) const {
  const Field& f = fields_.at(g);
  const std::uint64_t value = (state.bits >> f.shift) & low_bits(f.width);
  std::vector<int> out;
  for (int v = 2; v <= f.generator.top(); ++v) {
    if ((value >> (f.generator.top() - v)) & 1U) out.push_back(v);
  }
  return out;
}

OperationState StateLayout::with_levels(const std::vector<std::vector<int>>& levels_per_field) const {
  if (levels_per_field.size() != fields_.size()) throw InvalidInput("one level list per nonlinear generator expected");
  OperationState state;
  for (std::size_t g = 0; g < fields_.size(); ++g) {
    const Field& f = fields_[g];
    for (int v : levels_per_field[g]) {
      if (v < 2 || v > f.generator.top()) throw InvalidInput("state level out of range");
      state.bits |= std::uint64_t{1} << (f.shift + f.generator.top() - v);
    }
  }
  return state;
}

OperationState left_child(OperationState state, const StateLayout& layout) {
  OperationState out;
  for (const auto& f : layout.fields()) {
    const std::uint64_t mask = low_bits(f.width);
    const std::uint64_t value = (state.bits >> f.shift) & mask;
    out.bits |= (((value & ~f.break_mask) << 1) & mask) << f.shift;
  }
  return out;
}

RightChild right_child(OperationState state, const StateLayout& layout) {
  RightChild out;
  unsigned parity = static_cast<unsigned>(layout.linear_count());
  for (const auto& f : layout.fields()) {
    const std::uint64_t mask = low_bits(f.width);
    const std::uint64_t value = (state.bits >> f.shift) & mask;
    parity += static_cast<unsigned>((value >> (f.width - 1)) & 1U);  // level 2 turns into a complement
    out.state.bits |= ((((value << 1) & mask) | 1U) << f.shift);
  }
  out.complement = parity & 1U;
  return out;
}

RulesMatrix build_rules_matrix(const RSFunctionSpec& spec, const RulesMatrixOptions& options) {
  if (spec.is_pure_linear()) throw InvalidInput("the pure linear function has no rules matrix");
  const StateLayout layout(spec);
  if (layout.width() > options.max_state_width) {
    throw BudgetExceeded("state width Rs - t = " + std::to_string(layout.width()) +
                         " exceeds the matrix budget of " + std::to_string(options.max_state_width));
  }

  const std::uint64_t states = layout.state_count();
  const std::uint64_t corner = states;
  const std::uint64_t dim = states + 1;

  struct Column {
    std::uint64_t left;
    std::uint64_t right;
    bool complement;
  };
  auto column = [&](std::uint64_t j) {
    const OperationState s{j};
    const OperationState l = left_child(s, layout);
    const RightChild r = right_child(s, layout);
    if (l == r.state) throw std::logic_error("left and right children coincide");
    return Column{l.bits, r.state.bits, r.complement};
  };

  // In-degree of every row; the corner row always keeps its diagonal entry.
  std::vector<std::uint32_t> indegree(dim, 0);
  for (std::uint64_t j = 0; j < states; ++j) {
    const Column c = column(j);
    ++indegree[c.left];
    ++indegree[c.right];
    if (c.complement) ++indegree[corner];
  }
  ++indegree[corner];

  std::vector<char> alive(dim, 1);
  std::vector<std::uint64_t> queue;
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (indegree[i] == 0) queue.push_back(i);
  }
  while (!queue.empty()) {
    const std::uint64_t i = queue.back();
    queue.pop_back();
    alive[i] = 0;
    const Column c = column(i);
    for (std::uint64_t row : {c.left, c.right}) {
      if (alive[row] && --indegree[row] == 0) queue.push_back(row);
    }
    if (c.complement) --indegree[corner];
  }

  RulesMatrix out;
  out.raw_dimension = dim;
  std::vector<std::uint64_t> position(dim, 0);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (alive[i]) {
      position[i] = out.kept.size();
      out.kept.push_back(i);
    }
  }

  std::vector<SparseIntMatrix::Entry> entries;
  for (std::uint64_t j : out.kept) {
    if (j == corner) {
      entries.push_back({position[corner], position[corner], 2});
      continue;
    }
    const Column c = column(j);
    if (alive[c.left]) entries.push_back({position[c.left], position[j], 1});
    if (alive[c.right]) entries.push_back({position[c.right], position[j], c.complement ? -1 : 1});
    if (c.complement) entries.push_back({position[corner], position[j], 1});
  }
  out.matrix = SparseIntMatrix(out.kept.size(), std::move(entries));
  return out;
}

void RulesMatrix::write_triples(std::ostream& out) const {
  for (const auto& e : matrix.entries()) {
    out << kept[e.row] << ' ' << kept[e.col] << ' ' << e.value.get_str() << '\n';
  }
}

}  // namespace rsbf
