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

#include "mqsym/partition.hpp"

#include <algorithm>
#include <sstream>

namespace mqsym {

SubsetMask SubsetMask::from_labels(std::span<const int> labels) {
    std::uint64_t bits = 0;
    for (int label : labels) {
        if (label < 1 || label > kMaxSites) {
            throw InvalidArgument("site label " + std::to_string(label) + " out of range 1.." +
                                  std::to_string(kMaxSites));
        }
        bits |= std::uint64_t{1} << (label - 1);
    }
    return SubsetMask(bits);
}

std::vector<int> SubsetMask::labels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
        out.push_back(std::countr_zero(rest) + 1);
    }
    return out;
}

std::string SubsetMask::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int label : labels()) {
        if (!first) {
            os << ',';
        }
        os << label;
        first = false;
    }
    os << '}';
    return os.str();
}

Partition Partition::validate(std::vector<SubsetMask> blocks, int num_sites) {
    if (num_sites < 1 || num_sites > kMaxSites) {
        throw PartitionError(PartitionDefect::bad_size,
                             "partition size " + std::to_string(num_sites) + " out of range");
    }
    const SubsetMask all = SubsetMask::full(num_sites);
    SubsetMask seen;
    for (const SubsetMask &block : blocks) {
        if (block.empty()) {
            throw PartitionError(PartitionDefect::empty_block, "partition has an empty block");
        }
        if (!block.is_subset_of(all)) {
            throw PartitionError(PartitionDefect::out_of_range,
                                 "block " + block.str() + " has labels above " + std::to_string(num_sites));
        }
        if (!(seen & block).empty()) {
            throw PartitionError(PartitionDefect::overlap,
                                 "blocks overlap on " + (seen & block).str());
        }
        seen |= block;
    }
    if (seen != all) {
        throw PartitionError(PartitionDefect::gap,
                             "labels " + complement(seen, num_sites).str() + " are not covered");
    }
    std::sort(blocks.begin(), blocks.end(),
              [](SubsetMask a, SubsetMask b) { return a.lowest() < b.lowest(); });
    return Partition(std::move(blocks), num_sites);
}

Partition Partition::from_labels(const std::vector<std::vector<int>> &blocks, int num_sites) {
    if (num_sites < 1 || num_sites > kMaxSites) {
        throw PartitionError(PartitionDefect::bad_size, "partition size " + std::to_string(num_sites) + " out of range");
    }
    std::vector<SubsetMask> masks;
    masks.reserve(blocks.size());
    for (const auto &block : blocks) {
        for (int label : block) {
            if (label < 1 || label > num_sites) {
                throw PartitionError(PartitionDefect::out_of_range,
                                     "label " + std::to_string(label) + " outside 1.." +
                                         std::to_string(num_sites));
            }
        }
        SubsetMask mask = SubsetMask::from_labels(block);
        if (mask.size() != static_cast<int>(block.size())) {
            throw PartitionError(PartitionDefect::overlap, "block lists a label twice");
        }
        masks.push_back(mask);
    }
    return validate(std::move(masks), num_sites);
}

Partition Partition::singletons(int num_sites) {
    std::vector<SubsetMask> blocks;
    for (int i = 1; i <= num_sites; ++i) {
        blocks.push_back(SubsetMask::single(i));
    }
    return validate(std::move(blocks), num_sites);
}

Partition Partition::whole(int num_sites) { return validate({SubsetMask::full(num_sites)}, num_sites); }

std::size_t Partition::block_of(int label) const {
    if (label < 1 || label > num_sites_) {
        throw InvalidArgument("label " + std::to_string(label) + " outside 1.." + std::to_string(num_sites_));
    }
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (blocks_[k].contains(label)) {
            return k;
        }
    }
    throw InvalidArgument("corrupt partition");  // unreachable for validated partitions
}

bool Partition::refines(const Partition &coarser) const {
    if (coarser.num_sites_ != num_sites_) {
        return false;
    }
    return std::all_of(blocks_.begin(), blocks_.end(), [&](SubsetMask block) {
        return block.is_subset_of(coarser.blocks_[coarser.block_of(block.lowest())]);
    });
}

std::vector<std::vector<int>> Partition::to_labels() const {
    std::vector<std::vector<int>> out;
    out.reserve(blocks_.size());
    for (const SubsetMask &block : blocks_) {
        out.push_back(block.labels());
    }
    return out;
}

std::string Partition::str() const {
    std::string out = "{";
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (k > 0) {
            out += ',';
        }
        out += blocks_[k].str();
    }
    return out + "}";
}

Partition meet(const Partition &a, const Partition &b) {
    if (a.num_sites() != b.num_sites()) {
        throw InvalidArgument("meet of partitions over " + std::to_string(a.num_sites()) + " and " +
                              std::to_string(b.num_sites()) + " sites");
    }
    std::vector<SubsetMask> blocks;
    for (SubsetMask x : a.blocks()) {
        for (SubsetMask y : b.blocks()) {
            if (SubsetMask c = x & y; !c.empty()) {
                blocks.push_back(c);
            }
        }
    }
    return Partition::validate(std::move(blocks), a.num_sites());
}

std::vector<Partition> all_partitions(int num_sites) {
    if (num_sites < 1 || num_sites > 12) {
        throw InvalidArgument("all_partitions supports 1..12 sites");
    }
    // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
    std::vector<Partition> out;
    std::vector<int> rgs(static_cast<std::size_t>(num_sites), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(num_sites), 0);
    while (true) {
        std::vector<SubsetMask> blocks(static_cast<std::size_t>(prefix_max.back() + 1));
        for (int i = 0; i < num_sites; ++i) {
            blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])] |= SubsetMask::single(i + 1);
        }
        out.push_back(Partition::validate(std::move(blocks), num_sites));

        int i = num_sites - 1;
        while (i > 0 && rgs[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) {
            --i;
        }
        if (i == 0) {
            break;
        }
        auto ui = static_cast<std::size_t>(i);
        ++rgs[ui];
        prefix_max[ui] = std::max(prefix_max[ui - 1], rgs[ui]);
        for (std::size_t j = ui + 1; j < rgs.size(); ++j) {
            rgs[j] = 0;
            prefix_max[j] = prefix_max[ui];
        }
    }
    return out;
}

}  // namespace mqsym
