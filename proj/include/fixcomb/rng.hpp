// Seeded randomness with a platform-independent contract: mt19937_64 output
// is pinned by the standard, and rejection sampling keeps draws unbiased.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace fixcomb {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform value in [0, k).
  std::uint64_t below(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("empty range");
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % k);
    std::uint64_t r;
    do {
      r = gen_();
    } while (r >= limit);
    return r % k;
  }

  template <class Container>
  const typename Container::value_type& pick(const Container& c) {
    if (c.empty()) throw std::invalid_argument("pick from empty container");
    return c[below(c.size())];
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace fixcomb
