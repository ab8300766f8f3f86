#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "subfields/errors.hpp"

namespace subfields {

// Partition of {0..r-1} stored as v[i] = smallest element of the part
// containing i. This is the 0-based form of the usual partition vector; the
// 1-based form appears only at the I/O boundary (to_string, JSON).
class PartitionVec {
 public:
  PartitionVec() = default;

  // Validates the normal form.
  explicit PartitionVec(std::vector<std::size_t> v) : v_(std::move(v)) {
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (v_[i] > i || v_[v_[i]] != v_[i]) throw DomainError("partition vector is not in normal form");
  }

  static PartitionVec discrete(std::size_t r) {
    std::vector<std::size_t> v(r);
    std::iota(v.begin(), v.end(), 0);
    return PartitionVec(std::move(v));
  }

  static PartitionVec trivial(std::size_t r) { return PartitionVec(std::vector<std::size_t>(r, 0)); }

  // From a list of 0-based parts covering {0..r-1} exactly once.
  static PartitionVec from_parts(std::size_t r, const std::vector<std::vector<std::size_t>>& parts) {
    std::vector<std::size_t> v(r, r);
    for (const auto& part : parts) {
      if (part.empty()) throw DomainError("partition: empty part");
      std::size_t m = part[0];
      for (auto i : part) m = std::min(m, i);
      for (auto i : part) {
        if (i >= r || v[i] != r) throw DomainError("partition: parts do not cover {0..r-1} exactly once");
        v[i] = m;
      }
    }
    for (auto x : v)
      if (x == r) throw DomainError("partition: parts do not cover {0..r-1} exactly once");
    return PartitionVec(std::move(v));
  }

  std::size_t size() const { return v_.size(); }
  std::size_t rep(std::size_t i) const { return v_[i]; }
  const std::vector<std::size_t>& vec() const { return v_; }

  std::size_t part_count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) c += v_[i] == i;
    return c;
  }

  // Parts ordered by smallest element, each sorted ascending; the first
  // part contains 0.
  std::vector<std::vector<std::size_t>> parts() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> slot(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (v_[i] == i) {
        slot[i] = out.size();
        out.emplace_back();
      }
      out[slot[v_[i]]].push_back(i);
    }
    return out;
  }

  std::vector<std::size_t> first_part() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (v_[i] == 0) out.push_back(i);
    return out;
  }

  bool is_discrete() const { return part_count() == v_.size(); }
  bool is_trivial() const { return part_count() <= 1; }

  // 1-based, e.g. {{1,2},{3,4}}
  std::string to_string() const {
    std::string s = "{";
    bool first_part = true;
    for (const auto& part : parts()) {
      s += first_part ? "{" : ",{";
      first_part = false;
      for (std::size_t k = 0; k < part.size(); ++k) s += (k ? "," : "") + std::to_string(part[k] + 1);
      s += "}";
    }
    return s + "}";
  }

  friend bool operator==(const PartitionVec&, const PartitionVec&) = default;
  friend auto operator<=>(const PartitionVec&, const PartitionVec&) = default;

 private:
  std::vector<std::size_t> v_;
};

namespace partition_detail {

// Union-find whose representative is always the smallest member.
class MinUnionFind {
 public:
  explicit MinUnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b)
      parent_[b] = a;
    else
      parent_[a] = b;
  }

  // Representative of every element; consumes the structure.
  std::vector<std::size_t> reps() && {
    for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = find(i);
    return std::move(parent_);
  }

 private:
  std::vector<std::size_t> parent_;
};

inline void check_same_size(const PartitionVec& p, const PartitionVec& q) {
  if (p.size() != q.size()) throw DomainError("partitions of different sets");
}

}  // namespace partition_detail

// Finest partition that both p and q refine.
inline PartitionVec join(const PartitionVec& p, const PartitionVec& q) {
  partition_detail::check_same_size(p, q);
  partition_detail::MinUnionFind uf(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    uf.unite(i, p.rep(i));
    uf.unite(i, q.rep(i));
  }
  return PartitionVec(std::move(uf).reps());
}

// Every part of p lies inside one part of q.
inline bool refines(const PartitionVec& p, const PartitionVec& q) {
  partition_detail::check_same_size(p, q);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (q.rep(i) != q.rep(p.rep(i))) return false;
  return true;
}

}  // namespace subfields
