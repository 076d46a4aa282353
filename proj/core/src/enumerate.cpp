#include "stree/enumerate.hpp"

#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "stree/error.hpp"

namespace stree {

std::uint64_t string_space_size(std::size_t n, std::uint32_t sigma) noexcept {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (sigma != 0 && total > kMax / sigma) return kMax;
        total *= sigma;
    }
    return total;
}

std::uint64_t require_budget(std::size_t n, std::uint32_t sigma, std::uint64_t budget) {
    boost::multiprecision::cpp_int exact = boost::multiprecision::pow(
        boost::multiprecision::cpp_int(sigma), static_cast<unsigned>(n));
    if (exact > budget) {
        std::string required = exact.str();
        throw BudgetError(required, "enumerating " + std::to_string(sigma) + "^" +
                                        std::to_string(n) + " = " + required +
                                        " strings exceeds the budget of " +
                                        std::to_string(budget));
    }
    return static_cast<std::uint64_t>(exact);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_ranges(std::uint64_t total,
                                                                      unsigned parts) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    if (total == 0) return out;
    if (parts == 0) parts = 1;
    if (parts > total) parts = static_cast<unsigned>(total);
    const std::uint64_t base = total / parts;
    const std::uint64_t extra = total % parts;
    std::uint64_t first = 0;
    for (unsigned p = 0; p < parts; ++p) {
        std::uint64_t len = base + (p < extra ? 1 : 0);
        out.emplace_back(first, first + len);
        first += len;
    }
    return out;
}

}  // namespace stree
