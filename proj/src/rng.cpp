#include "wf/rng.hpp"

#include <cmath>

namespace wf {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    // Decorrelate (seed, stream) pairs before the counter walk starts.
    counter_ = mix(seed + kGolden * (stream + 1)) + kGolden * stream;
}

std::uint64_t Rng::next_u64() {
    counter_ += kGolden;
    return mix(counter_);
}

double Rng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::next_unit_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::next_exponential() {
    double u = next_unit_open();
    // u in (0,1), so the log is finite and the deviate strictly positive.
    return -std::log(u);
}

int Rng::next_int(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

}  // namespace wf
