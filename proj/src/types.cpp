#include "bgo/types.hpp"

#include <stdexcept>

namespace bgo {

void require_point(const Vector& x, const std::string& what)
{
    if (x.size() < 1) {
        throw std::invalid_argument(what + ": point must have dimension >= 1");
    }
    if (!x.allFinite()) {
        throw std::invalid_argument(what + ": point has non-finite coordinates");
    }
}

namespace {

std::uint64_t splitmix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b)
{
    return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

}  // namespace bgo
