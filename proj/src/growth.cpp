#include "euclidzi/growth.hpp"

#include <stdexcept>

namespace euclidzi {

std::uint64_t w(int n) {
    if (n < 0) throw std::out_of_range("w index must be nonnegative");
    if (n > 124) throw std::overflow_error("w(n) exceeds 64 bits for n > 124");
    const int k = n / 2;
    return n % 2 == 0 ? std::uint64_t{3} << k : std::uint64_t{1} << (k + 2);
}

int min_snowflake_index(std::uint64_t x) {
    if (x == 0) throw std::domain_error("min_snowflake_index needs x >= 1");
    int m = 0;
    while (w(m) - 2 < x) ++m;
    return m;
}

}  // namespace euclidzi
