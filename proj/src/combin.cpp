#include "sizeramsey/combin.hpp"

namespace ramsey {

bool next_combination(std::vector<std::uint32_t>& idx, std::size_t pool_size) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] + (k - i) < pool_size) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

double choose_approx(std::size_t v, std::uint32_t k) {
    if (k > v) return 0.0;
    double acc = 1.0;
    for (std::uint32_t i = 0; i < k; ++i)
        acc *= static_cast<double>(v - i) / static_cast<double>(i + 1);
    return acc;
}

} // namespace ramsey
