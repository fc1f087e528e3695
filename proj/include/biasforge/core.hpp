// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIASFORGE_CORE_HPP_
#define BIASFORGE_CORE_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace biasforge {

using VertexId = int;
using EdgeId = int;

// Vertex and edge identifiers index 64-bit masks.
inline constexpr int kMaxIds = 64;

template <class Tag>
class IdSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr IdSet() = default;
  constexpr explicit IdSet(std::uint64_t bits) : bits_(bits) {}
  constexpr IdSet(std::initializer_list<int> ids) {
    for (int id : ids) insert(id);
  }

  static constexpr IdSet single(int id) { return IdSet(std::uint64_t{1} << id); }
  template <class Range>
  static IdSet of(const Range& ids) {
    IdSet s;
    for (int id : ids) s.insert(id);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int id) const {
    return id >= 0 && id < kMaxIds && ((bits_ >> id) & 1u) != 0;
  }
  constexpr void insert(int id) { bits_ |= std::uint64_t{1} << check(id); }
  constexpr void erase(int id) { bits_ &= ~(std::uint64_t{1} << check(id)); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
  constexpr int last() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }
  constexpr bool subset_of(IdSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(IdSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return std::vector<int>(begin(), end()); }

  friend constexpr IdSet operator|(IdSet a, IdSet b) { return IdSet(a.bits_ | b.bits_); }
  friend constexpr IdSet operator&(IdSet a, IdSet b) { return IdSet(a.bits_ & b.bits_); }
  friend constexpr IdSet operator^(IdSet a, IdSet b) { return IdSet(a.bits_ ^ b.bits_); }
  friend constexpr IdSet operator-(IdSet a, IdSet b) { return IdSet(a.bits_ & ~b.bits_); }
  constexpr IdSet& operator|=(IdSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr IdSet& operator&=(IdSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr IdSet& operator-=(IdSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const IdSet&) const = default;
  constexpr auto operator<=>(const IdSet&) const = default;

 private:
  static constexpr int check(int id) {
    if (id < 0 || id >= kMaxIds) throw std::out_of_range("identifier outside [0, 64)");
    return id;
  }
  std::uint64_t bits_ = 0;
};

struct EdgeTag;
struct VertexTag;
using EdgeSet = IdSet<EdgeTag>;
using VertexSet = IdSet<VertexTag>;

// Presentation order: smaller sets first, then lexicographic on sorted ids.
template <class Tag>
bool canonical_less(IdSet<Tag> a, IdSet<Tag> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return false;
}

template <class Tag>
void sort_canonical(std::vector<IdSet<Tag>>& sets) {
  std::sort(sets.begin(), sets.end(), canonical_less<Tag>);
}

enum class ErrorCode {
  kParse,
  kUsage,
  kUnknownVertex,
  kUnknownEdge,
  kDuplicateId,
  kThetaViolation,
  kNotACycle,
  kCapExceeded,
  kLoopContraction,
  kNotBalancing,
  kNotSigned,
  kNotAlmostBalanced,
  kBadClass,
  kGraphicTarget,
  kDisconnectedTarget,
  kPrecondition,
  kCircuitShapeUnsupported,
  kGroundMismatch,
  kEndpointMismatch,
  kInvariantViolation,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kUsage: return "UsageError";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kThetaViolation: return "ThetaViolation";
    case ErrorCode::kNotACycle: return "NotACycle";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kLoopContraction: return "LoopContraction";
    case ErrorCode::kNotBalancing: return "NotBalancing";
    case ErrorCode::kNotSigned: return "NotSigned";
    case ErrorCode::kNotAlmostBalanced: return "NotAlmostBalanced";
    case ErrorCode::kBadClass: return "BadClass";
    case ErrorCode::kGraphicTarget: return "GraphicTarget";
    case ErrorCode::kDisconnectedTarget: return "DisconnectedTarget";
    case ErrorCode::kPrecondition: return "PreconditionViolated";
    case ErrorCode::kCircuitShapeUnsupported: return "CircuitShapeUnsupported";
    case ErrorCode::kGroundMismatch: return "GroundMismatch";
    case ErrorCode::kEndpointMismatch: return "EndpointMismatch";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code), message_(message) {}
  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

struct Limits {
  std::size_t max_cycles = 1'000'000;
  int u24_ground = 16;
  int graphic_ground = 12;
  int graphic_rank = 7;
  int census_ground = 14;
  int census_vertices = 7;

  // Lifts every ground-set cap to at least n.
  Limits with_ground(int n) const {
    Limits l = *this;
    l.u24_ground = std::max(l.u24_ground, n);
    l.graphic_ground = std::max(l.graphic_ground, n);
    l.census_ground = std::max(l.census_ground, n);
    return l;
  }

  static Limits from_environment() {
    Limits l;
    if (const char* s = std::getenv("BIASFORGE_MAX_CYCLES"); s != nullptr && *s != '\0') {
      l.max_cycles = static_cast<std::size_t>(std::strtoull(s, nullptr, 10));
    }
    if (const char* s = std::getenv("BIASFORGE_MAX_GROUND"); s != nullptr && *s != '\0') {
      int n = static_cast<int>(std::strtol(s, nullptr, 10));
      l.u24_ground = l.graphic_ground = l.census_ground = n;
    }
    return l;
  }
};

inline const Limits& default_limits() {
  static const Limits limits = Limits::from_environment();
  return limits;
}

// Disjoint-set forest over small integer keys.
class UnionFind {
 public:
  explicit UnionFind(int n = kMaxIds) : parent_(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace biasforge

template <class Tag>
struct std::hash<biasforge::IdSet<Tag>> {
  std::size_t operator()(const biasforge::IdSet<Tag>& s) const noexcept {
    std::uint64_t x = s.bits() + 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

#endif  // BIASFORGE_CORE_HPP_
