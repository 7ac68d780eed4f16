#include "rsbf/weight.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>
#include <thread>

#include "rsbf/errors.hpp"

namespace rsbf {

namespace {

// Lane patterns: bit l of kLane[p] is bit p of l, for the six row bits that
// live inside one 64-row word.
constexpr std::uint64_t kLane[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

struct SlicedMonomial {
  std::uint64_t lanes;  // AND of the in-word variable columns
  std::uint64_t high;   // word-index bits that must all be set
};

std::vector<SlicedMonomial> slice(std::span<const std::uint64_t> monomials, int n) {
  std::vector<SlicedMonomial> out;
  out.reserve(monomials.size());
  for (std::uint64_t m : monomials) {
    SlicedMonomial s{~std::uint64_t{0}, 0};
    for (std::uint64_t r = m; r; r &= r - 1) {
      const int var = std::countr_zero(r) + 1;
      if (var > n) throw InvalidInput("monomial variable exceeds n");
      const int p = n - var;
      if (p < 6) {
        s.lanes &= kLane[p];
      } else {
        s.high |= std::uint64_t{1} << (p - 6);
      }
    }
    out.push_back(s);
  }
  // Group identical high masks so the inner loop branches predictably.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.high < b.high; });
  return out;
}

std::uint64_t count_words(const std::vector<SlicedMonomial>& sliced, std::uint64_t first, std::uint64_t last) {
  std::uint64_t total = 0;
  for (std::uint64_t w = first; w < last; ++w) {
    std::uint64_t value = 0;
    for (const auto& s : sliced) {
      if ((w & s.high) == s.high) value ^= s.lanes;
    }
    total += static_cast<std::uint64_t>(std::popcount(value));
  }
  return total;
}

}  // namespace

std::uint64_t monomial_sum_weight(std::span<const std::uint64_t> monomials, int n, int chunk_bits,
                                  unsigned workers) {
  if (n < 0 || n > 62) throw InvalidInput("variable count out of range for enumeration");
  if (chunk_bits < 6) throw InvalidInput("chunk size must be at least 2^6 rows");
  const auto sliced = slice(monomials, n);

  if (n < 6) {
    std::uint64_t value = 0;
    for (const auto& s : sliced) value ^= s.lanes;  // s.high == 0 here
    value &= (std::uint64_t{1} << (1U << n)) - 1;
    return static_cast<std::uint64_t>(std::popcount(value));
  }

  const std::uint64_t words = std::uint64_t{1} << (n - 6);
  const std::uint64_t chunk_words = std::uint64_t{1} << std::min(chunk_bits - 6, n - 6);
  const std::uint64_t chunks = words / chunk_words;

  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));

  std::atomic<std::uint64_t> next{0};
  std::vector<std::uint64_t> partial(workers, 0);
  auto work = [&](unsigned id) {
    for (std::uint64_t c = next.fetch_add(1); c < chunks; c = next.fetch_add(1)) {
      partial[id] += count_words(sliced, c * chunk_words, (c + 1) * chunk_words);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

std::uint64_t weight(const RSFunctionSpec& spec, int n, Interpretation interpretation, const WeightOptions& options) {
  if (n > options.budget_n) {
    throw BudgetExceeded("weight at n=" + std::to_string(n) + " exceeds the enumeration budget n <= " +
                         std::to_string(options.budget_n));
  }
  const auto monomials = function_monomials(spec, n, interpretation);
  return monomial_sum_weight(monomials, n, options.chunk_bits, options.workers);
}

WeightSequence weight_sequence(const RSFunctionSpec& spec, int n_from, int n_to, Interpretation interpretation,
                               const WeightOptions& options) {
  if (n_to < n_from) throw InvalidInput("empty weight range");
  WeightSequence seq{n_from, {}};
  seq.values.reserve(static_cast<std::size_t>(n_to - n_from + 1));
  for (int n = n_from; n <= n_to; ++n) {
    seq.values.emplace_back(static_cast<unsigned long>(weight(spec, n, interpretation, options)));
  }
  return seq;
}

}  // namespace rsbf
