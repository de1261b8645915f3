#include "iss/profile.hpp"

#include <stdexcept>

namespace iss {

Profile::Profile(std::uint32_t bits, int dimension) {
    if (dimension < 1 || dimension > kMaxDimension) {
        throw std::invalid_argument("profile dimension must be in [1, 32], got " +
                                    std::to_string(dimension));
    }
    if (dimension < kMaxDimension && (bits >> dimension) != 0) {
        throw std::invalid_argument("profile bits exceed dimension " + std::to_string(dimension));
    }
    bits_ = bits;
    dim_ = static_cast<std::uint8_t>(dimension);
}

Profile Profile::parse(std::string_view s) {
    if (s.empty() || s.size() > kMaxDimension) {
        throw std::invalid_argument("profile string length must be in [1, 32]: \"" +
                                    std::string(s) + "\"");
    }
    std::uint32_t bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            bits |= (1u << i);
        } else if (s[i] != '0') {
            throw std::invalid_argument("profile string must contain only 0/1: \"" +
                                        std::string(s) + "\"");
        }
    }
    return Profile(bits, static_cast<int>(s.size()));
}

std::string Profile::str() const {
    std::string out(dim_, '0');
    for (int j = 0; j < dim_; ++j) {
        if (bit(j)) out[static_cast<std::size_t>(j)] = '1';
    }
    return out;
}

bool operator<(const Profile& a, const Profile& b) {
    const int d = a.dim_ < b.dim_ ? a.dim_ : b.dim_;
    for (int j = 0; j < d; ++j) {
        if (a.bit(j) != b.bit(j)) return b.bit(j);
    }
    return a.dim_ < b.dim_;
}

bool leq(const Profile& x, const Profile& y) {
    if (x.dimension() != y.dimension()) {
        throw std::invalid_argument("profile dimension mismatch: " +
                                    std::to_string(x.dimension()) + " vs " +
                                    std::to_string(y.dimension()));
    }
    return (x.bits() & ~y.bits()) == 0;
}

int hamming(const Profile& x, const Profile& y) {
    if (x.dimension() != y.dimension()) {
        throw std::invalid_argument("profile dimension mismatch in hamming()");
    }
    return std::popcount(x.bits() ^ y.bits());
}

Profile join(const Profile& x, const Profile& y) {
    if (x.dimension() != y.dimension()) {
        throw std::invalid_argument("profile dimension mismatch in join()");
    }
    return Profile(x.bits() | y.bits(), x.dimension());
}

std::vector<Profile> all_profiles(int dimension) {
    if (dimension < 1 || dimension > kMaxDimension) {
        throw std::invalid_argument("dimension must be in [1, 32]");
    }
    std::vector<Profile> out;
    out.reserve(std::size_t{1} << dimension);
    for (std::uint64_t raw = 0; raw < (std::uint64_t{1} << dimension); ++raw) {
        out.emplace_back(static_cast<std::uint32_t>(raw), dimension);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace iss
