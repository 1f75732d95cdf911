#ifndef SOLHARM_RNG_HPP
#define SOLHARM_RNG_HPP

#include <cstdint>
#include <random>

namespace solharm {

// Deterministic random stream. mt19937_64 seeded through seed_seq is fully
// specified by the standard, so (seed, stream) yields the same draws on every
// platform. Parallel sections derive one Rng per work item and reduce in
// index order, which keeps results independent of the thread count.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        std::seed_seq seq{
            static_cast<std::uint32_t>(seed & 0xffffffffu),
            static_cast<std::uint32_t>(seed >> 32),
            static_cast<std::uint32_t>(stream & 0xffffffffu),
            static_cast<std::uint32_t>(stream >> 32)};
        gen_.seed(seq);
    }

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0,1) with 53-bit resolution
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // uniform integer in [0, n)
    int uniform_int(int n) {
        return static_cast<int>(gen_() % static_cast<std::uint64_t>(n));
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace solharm

#endif
