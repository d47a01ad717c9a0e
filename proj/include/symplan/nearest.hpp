#pragma once

// Nearest-neighbor queries over a metric. LinearIndex scans; VpTree is a
// vantage-point tree that prunes with the triangle inequality, so it only
// needs the distance to be a metric (q_dist is one).

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

namespace symplan {

struct Neighbor {
  double distance = 0.0;
  std::size_t index = 0;

  friend bool operator<(const Neighbor& a, const Neighbor& b) {
    return a.distance < b.distance || (a.distance == b.distance && a.index < b.index);
  }
};

template <class T, class Metric>
class LinearIndex {
 public:
  explicit LinearIndex(Metric metric) : metric_(std::move(metric)) {}

  void add(T item) { items_.push_back(std::move(item)); }
  std::size_t size() const { return items_.size(); }
  const T& operator[](std::size_t i) const { return items_[i]; }

  Neighbor nearest(const T& query) const {
    Neighbor best{std::numeric_limits<double>::infinity(), 0};
    for (std::size_t i = 0; i < items_.size(); ++i) {
      const double d = metric_(items_[i], query);
      if (d < best.distance) best = {d, i};
    }
    return best;
  }

  std::vector<Neighbor> within(const T& query, double radius) const {
    std::vector<Neighbor> out;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      const double d = metric_(items_[i], query);
      if (d <= radius) out.push_back({d, i});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  Metric metric_;
  std::vector<T> items_;
};

template <class T, class Metric>
class VpTree {
 public:
  VpTree(std::vector<T> items, Metric metric) : items_(std::move(items)), metric_(std::move(metric)) {
    std::vector<std::size_t> ids(items_.size());
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    nodes_.reserve(items_.size());
    root_ = build(ids, 0, ids.size());
  }

  std::size_t size() const { return items_.size(); }
  const T& operator[](std::size_t i) const { return items_[i]; }

  /// The k closest items, sorted by (distance, index).
  std::vector<Neighbor> knn(const T& query, std::size_t k) const {
    std::priority_queue<Neighbor> heap;  // worst on top
    if (k > 0) knn_search(root_, query, k, heap);
    std::vector<Neighbor> out;
    out.reserve(heap.size());
    while (!heap.empty()) {
      out.push_back(heap.top());
      heap.pop();
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  /// Every item within radius (inclusive), sorted by (distance, index).
  std::vector<Neighbor> within(const T& query, double radius) const {
    std::vector<Neighbor> out;
    radius_search(root_, query, radius, out);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr int kLeaf = -1;
  // Slack on pruning tests so rounding in the metric cannot drop a neighbor.
  static constexpr double kSlack = 1e-12;

  struct Node {
    std::size_t item = 0;
    double mu = 0.0;  // items in `inside` are at distance <= mu from item
    int inside = kLeaf;
    int outside = kLeaf;
  };

  int build(std::vector<std::size_t>& ids, std::size_t lo, std::size_t hi) {
    if (lo >= hi) return kLeaf;
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({ids[lo], 0.0, kLeaf, kLeaf});
    if (hi - lo == 1) return id;
    const T& vantage = items_[ids[lo]];
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(hi - lo - 1);
    for (std::size_t i = lo + 1; i < hi; ++i) dist.push_back({metric_(vantage, items_[ids[i]]), ids[i]});
    const std::size_t mid = dist.size() / 2;
    std::nth_element(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(mid), dist.end());
    const double mu = dist[mid].first;
    for (std::size_t i = 0; i < dist.size(); ++i) ids[lo + 1 + i] = dist[i].second;
    const std::size_t split = lo + 1 + mid + 1;  // [lo+1, split) are <= mu
    nodes_[id].mu = mu;
    const int inside = build(ids, lo + 1, split);
    const int outside = build(ids, split, hi);
    nodes_[id].inside = inside;
    nodes_[id].outside = outside;
    return id;
  }

  void knn_search(int node, const T& query, std::size_t k, std::priority_queue<Neighbor>& heap) const {
    if (node == kLeaf) return;
    const Node& n = nodes_[node];
    const double d = metric_(items_[n.item], query);
    const Neighbor cand{d, n.item};
    if (heap.size() < k) {
      heap.push(cand);
    } else if (cand < heap.top()) {
      heap.pop();
      heap.push(cand);
    }
    auto tau = [&] { return heap.size() < k ? std::numeric_limits<double>::infinity() : heap.top().distance; };
    if (d <= n.mu) {
      knn_search(n.inside, query, k, heap);
      if (d + tau() + kSlack >= n.mu) knn_search(n.outside, query, k, heap);
    } else {
      knn_search(n.outside, query, k, heap);
      if (d - tau() - kSlack <= n.mu) knn_search(n.inside, query, k, heap);
    }
  }

  void radius_search(int node, const T& query, double radius, std::vector<Neighbor>& out) const {
    if (node == kLeaf) return;
    const Node& n = nodes_[node];
    const double d = metric_(items_[n.item], query);
    if (d <= radius) out.push_back({d, n.item});
    if (d - radius - kSlack <= n.mu) radius_search(n.inside, query, radius, out);
    if (d + radius + kSlack >= n.mu) radius_search(n.outside, query, radius, out);
  }

  std::vector<T> items_;
  Metric metric_;
  std::vector<Node> nodes_;
  int root_ = kLeaf;
};

}  // namespace symplan
