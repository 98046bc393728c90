#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpnm {

using NodeId = std::uint32_t;

// Hop-count distance. kInf never participates in arithmetic; use sat_add.
using Dist = std::uint16_t;
inline constexpr Dist kInf = std::numeric_limits<Dist>::max();

inline Dist sat_add(Dist a, Dist b) {
  if (a == kInf || b == kInf) return kInf;
  std::uint32_t s = std::uint32_t(a) + std::uint32_t(b);
  return s >= kInf ? kInf - 1 : Dist(s);
}

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violations on module contracts (e.g. a data update handed to a
// pattern-only operation).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// Set of node ids backed by 64-bit blocks; subset tests are the hot path in
// elimination detection.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t universe) : bits_((universe + 63) / 64, 0) {}

  void insert(NodeId id) {
    std::size_t blk = id / 64;
    if (blk >= bits_.size()) bits_.resize(blk + 1, 0);
    std::uint64_t mask = std::uint64_t(1) << (id % 64);
    if (!(bits_[blk] & mask)) {
      bits_[blk] |= mask;
      ++count_;
    }
  }

  bool contains(NodeId id) const {
    std::size_t blk = id / 64;
    if (blk >= bits_.size()) return false;
    return (bits_[blk] >> (id % 64)) & 1;
  }

  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains_all(const NodeSet& other) const {
    for (std::size_t i = 0; i < other.bits_.size(); ++i) {
      std::uint64_t o = other.bits_[i];
      if (!o) continue;
      if (i >= bits_.size() || (o & ~bits_[i]) != 0) return false;
    }
    return true;
  }

  void merge(const NodeSet& other) {
    if (other.bits_.size() > bits_.size()) bits_.resize(other.bits_.size(), 0);
    count_ = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (i < other.bits_.size()) bits_[i] |= other.bits_[i];
      count_ += std::size_t(__builtin_popcountll(bits_[i]));
    }
  }

  std::vector<NodeId> to_vector() const {
    std::vector<NodeId> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      std::uint64_t b = bits_[i];
      while (b) {
        int lsb = __builtin_ctzll(b);
        out.push_back(NodeId(i * 64 + std::size_t(lsb)));
        b &= b - 1;
      }
    }
    return out;
  }

  bool operator==(const NodeSet& other) const {
    std::size_t n = std::max(bits_.size(), other.bits_.size());
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t a = i < bits_.size() ? bits_[i] : 0;
      std::uint64_t b = i < other.bits_.size() ? other.bits_[i] : 0;
      if (a != b) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> bits_;
  std::size_t count_ = 0;
};

// FNV-1a, used for result digests in reports.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace gpnm
