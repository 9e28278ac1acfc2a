#ifndef CHARCALC_RANDOM_HPP
#define CHARCALC_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <charcalc/kring.hpp>

namespace charcalc
{

// Seeded generator of test bundles. Draws depend only on the seed, not on
// the standard library's distribution implementations.
class BundleGenerator
{
public:
    explicit BundleGenerator(std::uint64_t seed) : m_engine(seed) {}

    // Uniform in [lo, hi].
    int uniform(int lo, int hi);

    LineExponent exponent(std::size_t m, int range);

    // Up to max_terms line classes with exponents in [-range, range] and
    // multiplicities in {-2, -1, 1, 2}.
    KElement virtual_element(std::size_t m, int max_terms = 4, int range = 2);

    // Sum of 1..max_rank line classes (rank 0 allowed when min_rank = 0).
    KElement effective(std::size_t m, int max_rank = 3, int range = 2, int min_rank = 1);

    // Integer m x m matrix with entries in [-range, range].
    std::vector<std::vector<int>> matrix(std::size_t m, int range = 1);

    std::mt19937_64 &engine() { return m_engine; }

private:
    std::mt19937_64 m_engine;
};

} // namespace charcalc

#endif
