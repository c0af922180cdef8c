// Copyright 2026 The hdfusion Authors
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
#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hdfusion/optics.hpp"
#include "hdfusion/types.hpp"

namespace hdfusion {

/// Photon occupation numbers of m modes, |n_0 n_1 ... n_{m-1}>.
class FockPattern {
   public:
    FockPattern() = default;
    explicit FockPattern(std::vector<int> occupations);
    FockPattern(std::initializer_list<int> occupations);

    static FockPattern vacuum(int n_modes);
    /// Single photon in `mode`.
    static FockPattern single(int mode, int n_modes);

    int n_modes() const { return static_cast<int>(occupations_.size()); }
    int total_photons() const { return total_; }
    int operator[](int mode) const { return occupations_[static_cast<std::size_t>(mode)]; }
    const std::vector<int>& occupations() const { return occupations_; }

    /// prod_i n_i!
    double factorial_product() const;

    /// Concatenation: modes of `*this` followed by modes of `other`.
    FockPattern concat(const FockPattern& other) const;

    /// "|1,0,2>" style rendering.
    std::string to_string() const;

    auto operator<=>(const FockPattern&) const = default;
    bool operator==(const FockPattern&) const = default;

   private:
    std::vector<int> occupations_;
    int total_ = 0;
};

/// (port, time bin) address of a mode in the port-major layout, where port
/// p contains the d consecutive modes d*p .. d*p + d - 1.
struct QuditIndex {
    int port = 0;
    int time_bin = 0;

    int flat(int d) const { return d * port + time_bin; }
    static QuditIndex from_flat(int mode, int d) { return {mode / d, mode % d}; }

    bool operator==(const QuditIndex&) const = default;
};

/// Sparse superposition of Fock basis states over a fixed number of modes.
class FockVector {
   public:
    using Terms = std::map<FockPattern, Complex>;

    explicit FockVector(int n_modes = 0) : n_modes_(n_modes) {}
    FockVector(int n_modes, std::initializer_list<std::pair<FockPattern, Complex>> terms);

    static FockVector basis(const FockPattern& pattern);
    static FockVector vacuum(int n_modes) { return basis(FockPattern::vacuum(n_modes)); }

    int n_modes() const { return n_modes_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Adds `amp` to the amplitude of `pattern` (which must have n_modes modes).
    void add(const FockPattern& pattern, Complex amp);
    Complex amplitude(const FockPattern& pattern) const;

    double norm_squared() const;
    bool is_normalized(double tolerance = 1e-10) const;
    FockVector& scale(Complex factor);
    void prune(double threshold = tol::kPrune);

    /// Photon number shared by every term; throws if terms disagree or empty.
    int photon_number() const;

    /// Tensor product: modes of `*this` followed by modes of `other`.
    FockVector tensor(const FockVector& other) const;

    /// Places this state on `target_modes` of a larger vacuum system.
    FockVector embedded(std::span<const int> target_modes, int total_modes) const;

    /// max over patterns of |a_p - b_p|.
    double distance(const FockVector& other) const;

   private:
    int n_modes_ = 0;
    Terms terms_;
};

/// <output| U |input> = per(U[output, input]) / sqrt(prod out! prod in!),
/// rows and columns repeated per occupation. Returns exactly 0 when photon
/// numbers differ; throws std::invalid_argument on mode-count mismatch.
Complex transition_amplitude(const ModeUnitary& u, const FockPattern& input,
                             const FockPattern& output);

/// Applies the Fock-space representation of `u`, pruning amplitudes below
/// tol::kPrune.
FockVector apply_unitary(const FockVector& state, const ModeUnitary& u);

using PatternFilter = std::function<bool(const FockPattern&)>;

/// Weak compositions of `n_photons` into `n_modes` parts, produced lazily in
/// decreasing lexicographic order: (2,0), (1,1), (0,2).
class Compositions {
   public:
    class iterator {
       public:
        using iterator_category = std::input_iterator_tag;
        using value_type = FockPattern;
        using difference_type = std::ptrdiff_t;
        using pointer = const FockPattern*;
        using reference = const FockPattern&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        bool operator==(const iterator& other) const { return done_ == other.done_; }

       private:
        friend class Compositions;
        iterator(int n_modes, int n_photons);

        std::vector<int> occ_;
        FockPattern current_;
        bool done_ = true;
    };

    Compositions(int n_modes, int n_photons);

    iterator begin() const { return iterator(n_modes_, n_photons_); }
    iterator end() const { return iterator(); }

   private:
    int n_modes_;
    int n_photons_;
};

/// C(n_photons + n_modes - 1, n_modes - 1).
std::uint64_t composition_count(int n_modes, int n_photons);

/// Every weak composition passing `filter` (all when empty), in the order
/// of Compositions.
std::vector<FockPattern> enumerate_patterns(int n_modes, int n_photons,
                                            const PatternFilter& filter = {});

/// Patterns restricted by group totals. `groups` partitions the modes;
/// every entry of `group_counts` gives a photon count for each group.
/// The result is the union over count vectors of the per-group products of
/// compositions, sorted in decreasing lexicographic order.
std::vector<FockPattern> enumerate_grouped(int n_modes, const std::vector<std::vector<int>>& groups,
                                           const std::vector<std::vector<int>>& group_counts);

}  // namespace hdfusion
