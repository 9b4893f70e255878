#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace urbancl {

// Error taxonomy. The CLI maps ConfigError to exit code 2 and the data-ish
// errors (DataError, ParseError, NotFoundError) to exit code 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgumentError : public Error { public: using Error::Error; };
class InvalidGeometryError : public Error { public: using Error::Error; };
class InvalidStateError    : public Error { public: using Error::Error; };
class NotFoundError        : public Error { public: using Error::Error; };
class ParseError           : public Error { public: using Error::Error; };
class ShapeError           : public Error { public: using Error::Error; };
class DataError            : public Error { public: using Error::Error; };
class ConfigError          : public Error { public: using Error::Error; };
class NumericError         : public Error { public: using Error::Error; };
class IoError              : public Error { public: using Error::Error; };

// Deterministic RNG (SplitMix64 core). The distribution helpers use fixed
// bit mappings rather than std:: distributions, which are not specified
// bit-exactly by the standard; every stream is reproducible from its seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(split_mix(seed)) {}

    std::uint64_t next_u64();
    // Uniform in [0, 1).
    double uniform01();
    // Uniform in [lo, hi).
    double uniform(double lo, double hi);
    // Standard normal via Box-Muller (one value per call, spare cached).
    double normal();
    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);
    // Poisson with mean lambda (inversion for small lambda, normal tail else).
    std::uint64_t poisson(double lambda);

    // Derives an independent stream for a named sub-generator.
    static std::uint64_t derive(std::uint64_t master, std::uint64_t tag);

private:
    static std::uint64_t split_mix(std::uint64_t x);
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

// FNV-1a over bytes; used for config hashes.
std::uint64_t fnv1a(const std::string& bytes);
std::string hash_hex(std::uint64_t h);

}  // namespace urbancl
