#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace iss {

inline constexpr int kMaxDimension = 32;

// A point of the binary exposure lattice {0,1}^d, d <= 32.
// Coordinate j (1-based in the serialized form, leftmost first) is bit j-1.
class Profile {
public:
    Profile() : bits_(0), dim_(0) {}
    Profile(std::uint32_t bits, int dimension);

    // Parses a fixed-length bit string such as "0100" (coordinate 1 leftmost).
    static Profile parse(std::string_view s);

    std::string str() const;

    int dimension() const { return dim_; }
    std::uint32_t bits() const { return bits_; }
    bool bit(int coord) const { return (bits_ >> coord) & 1u; }
    int popcount() const { return std::popcount(bits_); }
    Profile with_bit(int coord) const { return Profile(bits_ | (1u << coord), dim_); }

    friend bool operator==(const Profile& a, const Profile& b) {
        return a.dim_ == b.dim_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const Profile& a, const Profile& b) { return !(a == b); }

    // Lexicographic by coordinate index (i.e. on the serialized string);
    // a total order used for deterministic tie-breaking and sorted output.
    friend bool operator<(const Profile& a, const Profile& b);

private:
    std::uint32_t bits_;
    std::uint8_t dim_;
};

// Coordinate-wise partial order: x <= y iff x_j <= y_j for all j.
// Throws std::invalid_argument on dimension mismatch.
bool leq(const Profile& x, const Profile& y);

inline bool strictly_less(const Profile& x, const Profile& y) {
    return leq(x, y) && x.bits() != y.bits();
}

int hamming(const Profile& x, const Profile& y);

// Coordinate-wise maximum (join of the lattice).
Profile join(const Profile& x, const Profile& y);

// All 2^d profiles of dimension d, in lexicographic order.
std::vector<Profile> all_profiles(int dimension);

} // namespace iss
