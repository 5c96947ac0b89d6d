#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "slnek/common.hpp"

namespace slnek {

// Dense histogram of integer entry values over [-vmax, vmax].
// This is the only accumulator touched during enumeration: per-partition
// copies are filled independently and merged afterwards, so totals are
// independent of the partition count.
class ValueHistogram {
  public:
    ValueHistogram() = default;
    explicit ValueHistogram(i64 vmax) : vmax_(vmax), count_(2 * static_cast<size_t>(vmax) + 1, 0) {}

    void add(i64 v) {
        ++count_[static_cast<size_t>(v + vmax_)];
        ++total_;
    }

    u64 at(i64 v) const {
        if (v < -vmax_ || v > vmax_) return 0;
        return count_[static_cast<size_t>(v + vmax_)];
    }

    i64 vmax() const { return vmax_; }
    u64 total() const { return total_; }

    void merge(const ValueHistogram& other) {
        if (other.vmax_ > vmax_) throw std::invalid_argument("ValueHistogram::merge: range mismatch");
        for (i64 v = -other.vmax_; v <= other.vmax_; ++v)
            count_[static_cast<size_t>(v + vmax_)] += other.at(v);
        total_ += other.total_;
    }

    bool operator==(const ValueHistogram& other) const {
        if (total_ != other.total_) return false;
        i64 m = vmax_ > other.vmax_ ? vmax_ : other.vmax_;
        for (i64 v = -m; v <= m; ++v)
            if (at(v) != other.at(v)) return false;
        return true;
    }

  private:
    i64 vmax_ = 0;
    std::vector<u64> count_;
    u64 total_ = 0;
};

// Histogram of omega values (counts of distinct prime factors); index = omega value.
struct OmegaHistogram {
    std::vector<u64> count;
    u64 total = 0;

    void add(int w, u64 n = 1) {
        if (w >= static_cast<int>(count.size())) count.resize(w + 1, 0);
        count[w] += n;
        total += n;
    }
    u64 at(int w) const {
        return (w >= 0 && w < static_cast<int>(count.size())) ? count[w] : 0;
    }
    int max_omega() const {
        for (int w = static_cast<int>(count.size()) - 1; w >= 0; --w)
            if (count[w] > 0) return w;
        return -1;
    }
};

}  // namespace slnek
