#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace slackprime {

using u64 = std::uint64_t;
using u32 = std::uint32_t;

// Error classes map onto the CLI exit codes: InputError -> 3, CapacityError -> 4.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a + b with wraparound reported instead of silently produced.
inline u64 checked_add(u64 a, u64 b) {
    u64 r = a + b;
    if (r < a) throw std::overflow_error("u64 addition overflow");
    return r;
}

// 10 significant digits, plain decimal, never scientific notation.
std::string format_real(double v);

// FNV-1a 64-bit, used for checkpoint record checksums.
u64 fnv1a64(const std::string& bytes);

}  // namespace slackprime
