#include <charcalc/random.hpp>

namespace charcalc
{

int BundleGenerator::uniform(int lo, int hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(m_engine() % span);
}

LineExponent BundleGenerator::exponent(std::size_t m, int range)
{
    LineExponent a(m);
    for (auto &v : a) {
        v = uniform(-range, range);
    }
    return a;
}

KElement BundleGenerator::virtual_element(std::size_t m, int max_terms, int range)
{
    static constexpr int multiplicities[] = {-2, -1, 1, 2};
    KElement x(m);
    const int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) {
        x.add_term(exponent(m, range), Integer(multiplicities[uniform(0, 3)]));
    }
    return x;
}

KElement BundleGenerator::effective(std::size_t m, int max_rank, int range, int min_rank)
{
    KElement x(m);
    const int n = uniform(min_rank, max_rank);
    for (int i = 0; i < n; ++i) {
        x.add_term(exponent(m, range), Integer(1));
    }
    return x;
}

std::vector<std::vector<int>> BundleGenerator::matrix(std::size_t m, int range)
{
    std::vector<std::vector<int>> out(m, std::vector<int>(m));
    for (auto &row : out) {
        for (auto &v : row) {
            v = uniform(-range, range);
        }
    }
    return out;
}

} // namespace charcalc
