// Copyright 2026 The mqsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Subsets of constituent labels and set partitions of {1..N}.
 *
 * Labels are 1-based everywhere in the public API. Label i is stored in
 * bit i-1 of a SubsetMask, so at most 64 constituents are supported.
 */
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mqsym/error.hpp"

namespace mqsym {

inline constexpr int kMaxSites = 64;

class SubsetMask {
  public:
    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

    /// Builds a mask from 1-based labels. Duplicates are ignored.
    static SubsetMask from_labels(std::span<const int> labels);
    static SubsetMask from_labels(std::initializer_list<int> labels) {
        return from_labels(std::span<const int>(labels.begin(), labels.size()));
    }
    /// {1..N}
    static constexpr SubsetMask full(int num_sites) {
        return SubsetMask(num_sites >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << num_sites) - 1);
    }
    static constexpr SubsetMask single(int label) { return SubsetMask(std::uint64_t{1} << (label - 1)); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int label) const {
        return label >= 1 && label <= 64 && ((bits_ >> (label - 1)) & 1U) != 0;
    }
    constexpr bool is_subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
    /// Smallest label in the set; 0 when empty.
    constexpr int lowest() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
    /// Largest label in the set; 0 when empty.
    constexpr int highest() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

    /// Ascending 1-based labels.
    std::vector<int> labels() const;
    std::string str() const;

    constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
    constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
    constexpr SubsetMask operator^(SubsetMask o) const { return SubsetMask(bits_ ^ o.bits_); }
    constexpr SubsetMask &operator|=(SubsetMask o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr SubsetMask &operator&=(SubsetMask o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr bool operator==(const SubsetMask &) const = default;
    constexpr auto operator<=>(const SubsetMask &) const = default;

  private:
    std::uint64_t bits_ = 0;
};

/// Complement of `subset` within {1..N}. Bits above N are dropped.
constexpr SubsetMask complement(SubsetMask subset, int num_sites) {
    return SubsetMask(~subset.bits() & SubsetMask::full(num_sites).bits());
}

/// Reasons `Partition::validate` can reject a block list.
enum class PartitionDefect { overlap, gap, empty_block, out_of_range, bad_size };

class PartitionError : public InvalidArgument {
  public:
    PartitionError(PartitionDefect defect, const std::string &what)
        : InvalidArgument(what), defect_(defect) {}
    PartitionDefect defect() const { return defect_; }

  private:
    PartitionDefect defect_;
};

/// Pairwise-disjoint nonempty blocks covering {1..N}, stored ascending by
/// smallest label. Two partitions are equal iff their block lists are.
class Partition {
  public:
    /// Validates and canonicalizes. Throws PartitionError.
    static Partition validate(std::vector<SubsetMask> blocks, int num_sites);
    static Partition from_labels(const std::vector<std::vector<int>> &blocks, int num_sites);
    /// {{1},{2},...,{N}}
    static Partition singletons(int num_sites);
    /// {{1..N}}
    static Partition whole(int num_sites);

    int num_sites() const { return num_sites_; }
    std::size_t size() const { return blocks_.size(); }
    const std::vector<SubsetMask> &blocks() const { return blocks_; }
    const SubsetMask &operator[](std::size_t k) const { return blocks_[k]; }

    /// Index of the block holding `label`. Throws on out-of-range labels.
    std::size_t block_of(int label) const;
    /// True when every block of *this lies inside some block of `coarser`.
    bool refines(const Partition &coarser) const;

    std::vector<std::vector<int>> to_labels() const;
    std::string str() const;

    bool operator==(const Partition &) const = default;

  private:
    Partition(std::vector<SubsetMask> blocks, int num_sites)
        : blocks_(std::move(blocks)), num_sites_(num_sites) {}

    std::vector<SubsetMask> blocks_;
    int num_sites_ = 0;
};

/// All nonempty pairwise intersections of blocks. Throws on mismatched N.
Partition meet(const Partition &a, const Partition &b);

/// Every set partition of {1..N} (Bell-number many), in restricted-growth-string order.
std::vector<Partition> all_partitions(int num_sites);

}  // namespace mqsym
