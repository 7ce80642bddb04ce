#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "error.hpp"

namespace mslkit {

/// Inclusive range of array indices (0-based).
struct IndexRange {
    std::size_t first = 0;
    std::size_t last = 0;

    std::size_t length() const { return last - first + 1; }
    bool contains(std::size_t i) const { return first <= i && i <= last; }
    bool contains(const IndexRange& o) const { return first <= o.first && o.last <= last; }
    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Per-query instrumentation: number of tree nodes whose label was read.
struct TreeQueryStats {
    std::size_t node_visits = 0;
};

/// Complete binary tree over the n-1 consecutive pairs (L[j], L[j+1]) of an
/// integer array L. Every node is labelled [min, max] of the values its
/// leaves span; a tree over n values has 2(n-1)-1 nodes.
///
/// Nodes live in heap order (children of v are 2v+1, 2v+2). When the leaf
/// count is not a power of two the leaves sit on two levels; the in-order
/// leaf sequence is then the deepest level followed by the level above,
/// which leaf_node()/leaf_index() translate.
///
/// Largest-interval queries read only the min labels: a window satisfies
/// L[k] >= alpha throughout iff every pair inside it has min >= alpha.
template<typename Value>
class ConsecutiveIntervalTree {
public:
    ConsecutiveIntervalTree() = default;

    explicit ConsecutiveIntervalTree(std::span<const Value> values) : n_(values.size()) {
        detail::require_input(n_ >= 1, "interval tree needs a non-empty array");
        leaves_ = n_ - 1;
        if(leaves_ == 0) return;
        const std::size_t nodes = 2 * leaves_ - 1;
        min_.resize(nodes);
        max_.resize(nodes);
        deep_first_ = std::bit_floor(nodes) - 1;
        deep_count_ = nodes - deep_first_;
        for(std::size_t j = 0; j < leaves_; ++j) {
            const std::size_t v = leaf_node(j);
            min_[v] = std::min(values[j], values[j + 1]);
            max_[v] = std::max(values[j], values[j + 1]);
        }
        for(std::size_t v = leaves_ - 1; v-- > 0;) {
            min_[v] = std::min(min_[2 * v + 1], min_[2 * v + 2]);
            max_[v] = std::max(max_[2 * v + 1], max_[2 * v + 2]);
        }
    }

    std::size_t value_count() const { return n_; }
    std::size_t leaf_count() const { return leaves_; }
    std::size_t node_count() const { return min_.size(); }

    std::size_t height() const {
        return leaves_ <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(node_count()) - 1);
    }

    Value node_min(std::size_t v) const { return min_[v]; }
    Value node_max(std::size_t v) const { return max_[v]; }
    bool is_leaf(std::size_t v) const { return v + 1 >= leaves_; }
    static constexpr std::size_t root() { return 0; }

    /// Heap position of the j-th leaf (pair L[j], L[j+1]) in in-order.
    std::size_t leaf_node(std::size_t j) const {
        return j < deep_count_ ? deep_first_ + j : (leaves_ - 1) + (j - deep_count_);
    }

    std::size_t leaf_index(std::size_t v) const {
        return v >= deep_first_ ? v - deep_first_ : v - (leaves_ - 1) + deep_count_;
    }

    /// Largest [a,b] containing i with values[k] >= alpha for all k in it;
    /// nullopt when values[i] < alpha. O(log n).
    std::optional<IndexRange> largest_interval(std::span<const Value> values, std::size_t i, Value alpha,
                                               TreeQueryStats* stats = nullptr) const {
        detail::require_input(values.size() == n_, "value array does not match the tree");
        detail::require_input(i < n_, "largest_interval: index out of range");
        if(values[i] < alpha) return std::nullopt;

        std::size_t visits = 0;
        IndexRange out{0, n_ - 1};
        // first failing pair at or right of i: pair j fails => values[j+1] < alpha
        if(i < leaves_) {
            if(auto j = first_failing(i, alpha, visits)) out.last = *j;
        }
        // last failing pair ending at or left of i
        if(i > 0) {
            if(auto j = last_failing(i - 1, alpha, visits)) out.first = *j + 1;
        }
        if(stats) stats->node_visits += visits;
        return out;
    }

private:
    bool fails(std::size_t v, Value alpha, std::size_t& visits) const {
        ++visits;
        return min_[v] < alpha;
    }

    std::optional<std::size_t> first_failing(std::size_t j0, Value alpha, std::size_t& visits) const {
        std::size_t v = leaf_node(j0);
        if(fails(v, alpha, visits)) return j0;
        while(v != root()) {
            const bool is_left = (v % 2) == 1;
            if(is_left && fails(v + 1, alpha, visits)) {
                v = v + 1;
                while(!is_leaf(v)) {
                    v = fails(2 * v + 1, alpha, visits) ? 2 * v + 1 : 2 * v + 2;
                }
                return leaf_index(v);
            }
            v = (v - 1) / 2;
        }
        return std::nullopt;
    }

    std::optional<std::size_t> last_failing(std::size_t j0, Value alpha, std::size_t& visits) const {
        std::size_t v = leaf_node(j0);
        if(fails(v, alpha, visits)) return j0;
        while(v != root()) {
            const bool is_right = (v % 2) == 0;
            if(is_right && fails(v - 1, alpha, visits)) {
                v = v - 1;
                while(!is_leaf(v)) {
                    v = fails(2 * v + 2, alpha, visits) ? 2 * v + 2 : 2 * v + 1;
                }
                return leaf_index(v);
            }
            v = (v - 1) / 2;
        }
        return std::nullopt;
    }

    std::size_t n_ = 0;
    std::size_t leaves_ = 0;
    std::size_t deep_first_ = 0;
    std::size_t deep_count_ = 0;
    std::vector<Value> min_;
    std::vector<Value> max_;
};

} // namespace mslkit
