#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ambigame {

/// Mixed-radix index space: flat indices over a product of finite axes,
/// row-major (first axis most significant, matching lexicographic order).
class IndexSpace {
public:
    IndexSpace() = default;

    explicit IndexSpace(std::vector<int> sizes) : sizes_(std::move(sizes)) {
        total_ = 1;
        for (int s : sizes_) total_ *= static_cast<long long>(s);
    }

    int axes() const { return static_cast<int>(sizes_.size()); }
    int size(int axis) const { return sizes_[static_cast<std::size_t>(axis)]; }
    const std::vector<int>& sizes() const { return sizes_; }

    /// Number of points; 1 for the empty product.
    long long total() const { return total_; }

    long long flatten(std::span<const int> multi) const {
        long long flat = 0;
        for (std::size_t k = 0; k < sizes_.size(); ++k) {
            flat = flat * sizes_[k] + multi[k];
        }
        return flat;
    }

    std::vector<int> unflatten(long long flat) const {
        std::vector<int> multi(sizes_.size());
        for (std::size_t k = sizes_.size(); k-- > 0;) {
            multi[k] = static_cast<int>(flat % sizes_[k]);
            flat /= sizes_[k];
        }
        return multi;
    }

    /// Componentwise partial order between two multi-indices.
    static bool leq(std::span<const int> a, std::span<const int> b) {
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] > b[k]) return false;
        }
        return true;
    }

private:
    std::vector<int> sizes_;
    long long total_ = 1;
};

} // namespace ambigame
