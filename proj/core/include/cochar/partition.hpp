#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cochar {

// Integer partition with trailing zeros stripped. The empty partition is the
// unit of every expansion.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  // Throws std::invalid_argument on a negative or increasing sequence.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }

  // 0-based row access; rows past the last part read as 0.
  int operator[](int i) const {
    return i >= 0 && i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  // "[4,2,1]", "[]" for the empty partition.
  std::string str() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// Weight first, then lexicographic on the parts.
struct WeightLexLess {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.parts() < b.parts();
  }
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

Partition conjugate(const Partition& lam);

// lambda_{k+1} <= l. Requires k + l >= 1.
bool in_hook(const Partition& lam, int k, int l);

// outer contains inner as Young diagrams.
bool contains(const Partition& outer, const Partition& inner);

struct HookSplit {
  Partition lambda0;  // lambda cap (l^k)
  Partition mu;       // arm, right of lambda0, at most k parts
  Partition nu;       // leg, conjugate of the rows below row k, at most l parts
  int k = 0;
  int l = 0;

  Partition reassemble() const;
  // Checks the full-row / full-column conditions; throws std::invalid_argument.
  static HookSplit make(Partition lambda0, Partition mu, Partition nu, int k, int l);

  friend bool operator==(const HookSplit&, const HookSplit&) = default;
};

// Throws std::invalid_argument when lam is outside H(k,l).
HookSplit split_hook(const Partition& lam, int k, int l);

// Number of standard Young tableaux of shape lam (hook-length formula).
mpz_class char_degree(const Partition& lam);

// lambda_{n+1} <= 2n and lambda_{2n+1} <= n.
bool in_hook_star_q2(const Partition& lam, int n);

// Boxes of lam inside the n x n square whose upper-left box is (n+1, n+1).
int q2_overlap(const Partition& lam, int n);

constexpr int kUnbounded = std::numeric_limits<int>::max();

// Partitions of n with at most max_parts parts, each at most max_part.
// Order: lexicographically decreasing.
std::vector<Partition> partitions_of(int n, int max_parts = kUnbounded,
                                     int max_part = kUnbounded);

// All beta with beta/lam a horizontal strip of m boxes, beta having at most
// max_parts parts, each at most max_part.
std::vector<Partition> horizontal_strips(const Partition& lam, int m,
                                         int max_parts = kUnbounded,
                                         int max_part = kUnbounded);

// Same for vertical strips (no two new boxes in one row).
std::vector<Partition> vertical_strips(const Partition& lam, int m,
                                       int max_parts = kUnbounded,
                                       int max_part = kUnbounded);

}  // namespace cochar
