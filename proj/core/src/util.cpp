#include "jamcov/util.hpp"

#include <charconv>
#include <cstdio>
#include <system_error>

namespace jamcov {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string to_hex(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
    return std::string(buf);
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) {
        return "nan";
    }
    return std::string(buf, ptr);
}

namespace {

double pairwise_sum_range(const double* data, std::size_t n) {
    if (n <= 8) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sum += data[i];
        }
        return sum;
    }
    const std::size_t half = n / 2;
    return pairwise_sum_range(data, half) + pairwise_sum_range(data + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
    return pairwise_sum_range(values.data(), values.size());
}

}  // namespace jamcov
