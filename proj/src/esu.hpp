#pragma once

// Enumeration of connected induced subgraphs (ESU, Wernicke 2006) restricted
// to subcubic subsets. Every connected vertex set whose smallest member is
// `root` is visited exactly once, unless pruned.

#include <cstdint>
#include <vector>

#include "isk4col/graph.hpp"

namespace isk4col::detail {

struct EsuLimits {
  std::size_t max_size = SIZE_MAX;
  int max_degree = 3;           // induced degree cap (monotone prune)
  int max_full_degree = 4;      // cap on vertices at induced degree == max_degree
  std::uint64_t max_steps = UINT64_MAX;
};

template <class Visit>
class SubcubicEnumerator {
 public:
  SubcubicEnumerator(const Graph& g, EsuLimits limits, Visit& visit)
      : g_(g), limits_(limits), visit_(visit),
        touch_(g.order(), 0), in_sub_(g.order(), 0) {}

  /// Returns false if the step budget ran out (search incomplete).
  bool run(int root) {
    root_ = root;
    sub_.clear();
    full_ = 0;
    if (!can_add(root)) return true;
    std::vector<int> ext;
    for (int u : g_.neighbors(root)) {
      if (u > root) ext.push_back(u);
    }
    add(root);
    extend(std::move(ext));
    remove(root);
    return !exhausted_;
  }

  bool truncated() const { return truncated_; }
  std::uint64_t steps() const { return steps_; }
  const std::vector<int>& subset() const { return sub_; }
  int induced_degree(int u) const { return touch_[static_cast<std::size_t>(u)]; }
  int full_count() const { return full_; }
  void stop() { stopped_ = true; }

 private:
  bool can_add(int w) const {
    int dw = touch_[static_cast<std::size_t>(w)];
    if (dw > limits_.max_degree) return false;
    int full = full_ + (dw == limits_.max_degree ? 1 : 0);
    for (int x : g_.neighbors(w)) {
      if (!in_sub_[static_cast<std::size_t>(x)]) continue;
      int dx = touch_[static_cast<std::size_t>(x)] + 1;
      if (dx > limits_.max_degree) return false;
      if (dx == limits_.max_degree) ++full;
    }
    return full <= limits_.max_full_degree;
  }

  void add(int w) {
    in_sub_[static_cast<std::size_t>(w)] = 1;
    sub_.push_back(w);
    if (touch_[static_cast<std::size_t>(w)] == limits_.max_degree) ++full_;
    for (int x : g_.neighbors(w)) {
      int& t = touch_[static_cast<std::size_t>(x)];
      ++t;
      if (in_sub_[static_cast<std::size_t>(x)] && t == limits_.max_degree) ++full_;
    }
  }

  void remove(int w) {
    for (int x : g_.neighbors(w)) {
      int& t = touch_[static_cast<std::size_t>(x)];
      if (in_sub_[static_cast<std::size_t>(x)] && t == limits_.max_degree) --full_;
      --t;
    }
    if (touch_[static_cast<std::size_t>(w)] == limits_.max_degree) --full_;
    in_sub_[static_cast<std::size_t>(w)] = 0;
    sub_.pop_back();
  }

  void extend(std::vector<int> ext) {
    if (stopped_ || exhausted_) return;
    if (++steps_ > limits_.max_steps) {
      exhausted_ = true;
      return;
    }
    visit_(*this);
    if (stopped_) return;
    if (sub_.size() >= limits_.max_size) {
      if (!ext.empty()) truncated_ = true;
      return;
    }
    while (!ext.empty()) {
      int w = ext.back();
      ext.pop_back();
      if (!can_add(w)) continue;
      std::vector<int> next = ext;
      for (int u : g_.neighbors(w)) {
        if (u > root_ && !in_sub_[static_cast<std::size_t>(u)] && touch_[static_cast<std::size_t>(u)] == 0) {
          next.push_back(u);
        }
      }
      add(w);
      extend(std::move(next));
      remove(w);
      if (stopped_ || exhausted_) return;
    }
  }

  const Graph& g_;
  EsuLimits limits_;
  Visit& visit_;
  std::vector<int> touch_;   // number of subset neighbors of each vertex
  std::vector<char> in_sub_;
  std::vector<int> sub_;
  int root_ = 0;
  int full_ = 0;
  std::uint64_t steps_ = 0;
  bool stopped_ = false;
  bool exhausted_ = false;
  bool truncated_ = false;
};

}  // namespace isk4col::detail
