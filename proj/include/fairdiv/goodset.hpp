#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fairdiv {

// A subset of the goods M = {1..m}, stored as a bitmask (good j <-> bit j-1).
// The bitmask representation caps m at 62, far above the exhaustive-search
// scales the solvers handle.
class GoodSet {
public:
    static constexpr int max_goods = 62;

    constexpr GoodSet() = default;
    constexpr explicit GoodSet(std::uint64_t mask) : mask_(mask) {}

    static GoodSet full(int m)
    {
        if (m < 0 || m > max_goods)
            throw std::out_of_range("good count out of range: " + std::to_string(m));
        return m == 0 ? GoodSet{} : GoodSet{(std::uint64_t{1} << m) - 1};
    }

    static GoodSet single(int good)
    {
        check_index_range(good);
        return GoodSet{std::uint64_t{1} << (good - 1)};
    }

    static GoodSet of(const std::vector<int>& goods)
    {
        GoodSet s;
        for (int g : goods) {
            if (s.contains(g))
                throw std::invalid_argument("duplicate good " + std::to_string(g));
            s.add(g);
        }
        return s;
    }

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr int size() const { return std::popcount(mask_); }

    constexpr bool contains(int good) const
    {
        return good >= 1 && good <= max_goods && (mask_ >> (good - 1)) & 1;
    }

    void add(int good)
    {
        check_index_range(good);
        mask_ |= std::uint64_t{1} << (good - 1);
    }

    void remove(int good)
    {
        check_index_range(good);
        mask_ &= ~(std::uint64_t{1} << (good - 1));
    }

    constexpr bool subset_of(GoodSet other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr bool intersects(GoodSet other) const { return (mask_ & other.mask_) != 0; }

    constexpr GoodSet operator|(GoodSet o) const { return GoodSet{mask_ | o.mask_}; }
    constexpr GoodSet operator&(GoodSet o) const { return GoodSet{mask_ & o.mask_}; }
    constexpr GoodSet minus(GoodSet o) const { return GoodSet{mask_ & ~o.mask_}; }
    GoodSet without(int good) const
    {
        GoodSet s{mask_};
        s.remove(good);
        return s;
    }
    GoodSet with(int good) const
    {
        GoodSet s{mask_};
        s.add(good);
        return s;
    }

    constexpr bool operator==(const GoodSet&) const = default;

    // Smallest good in the set; 0 when empty.
    constexpr int lowest() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t m = mask_; m; m &= m - 1)
            out.push_back(std::countr_zero(m) + 1);
        return out;
    }

private:
    static void check_index_range(int good)
    {
        if (good < 1 || good > max_goods)
            throw std::out_of_range("good index out of range: " + std::to_string(good));
    }

    std::uint64_t mask_ = 0;
};

} // namespace fairdiv
