#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "stree/strings.hpp"

namespace stree {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// sigma^n, saturating at UINT64_MAX.
std::uint64_t string_space_size(std::size_t n, std::uint32_t sigma) noexcept;

/// Returns sigma^n, or throws BudgetError naming the exact count when
/// it exceeds the budget.
std::uint64_t require_budget(std::size_t n, std::uint32_t sigma, std::uint64_t budget);

/// Contiguous split of [0, total) into at most `parts` nonempty ranges.
std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_ranges(std::uint64_t total,
                                                                      unsigned parts);

/// Calls fn(span of symbols) for every length-n string whose
/// lexicographic rank lies in [first, last). Symbols are 1..sigma and the
/// span is only valid during the call.
template <class Fn>
void for_each_string(std::size_t n, std::uint32_t sigma, std::uint64_t first,
                     std::uint64_t last, Fn&& fn) {
    if (first >= last) return;
    std::vector<Symbol> buf(n, 1);
    std::uint64_t rank = first;
    for (std::size_t i = n; i-- > 0;) {
        buf[i] = static_cast<Symbol>(rank % sigma) + 1;
        rank /= sigma;
    }
    for (std::uint64_t r = first; r < last; ++r) {
        fn(std::span<const Symbol>(buf));
        // odometer increment, least significant symbol last
        for (std::size_t i = n; i-- > 0;) {
            if (buf[i] < sigma) {
                ++buf[i];
                break;
            }
            buf[i] = 1;
        }
    }
}

/// Runs fn(part, first, last) for each range of partition_ranges on its
/// own thread. With one worker the call is made inline.
template <class Fn>
void parallel_ranges(std::uint64_t total, unsigned workers, Fn&& fn) {
    auto ranges = partition_ranges(total, workers == 0 ? 1 : workers);
    if (ranges.size() <= 1) {
        for (std::size_t p = 0; p < ranges.size(); ++p) fn(p, ranges[p].first, ranges[p].second);
        return;
    }
    std::vector<std::exception_ptr> errors(ranges.size());
    {
        std::vector<std::jthread> threads;
        threads.reserve(ranges.size());
        for (std::size_t p = 0; p < ranges.size(); ++p) {
            threads.emplace_back([&fn, &errors, p, r = ranges[p]] {
                try {
                    fn(p, r.first, r.second);
                } catch (...) {
                    errors[p] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace stree
