#include "cochar/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace cochar {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive: " + str());
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing: " + str());
    weight_ += parts_[i];
  }
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition Partition::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
  };
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail();
  std::vector<int> parts;
  std::string_view body(s.data() + 1, s.size() - 2);
  if (body.empty()) return Partition();
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    std::string_view tok = body.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0) fail();
    parts.push_back(v);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : p.parts()) {
    h ^= static_cast<std::size_t>(x);
    h *= 0x100000001b3ULL;
  }
  return h;
}

Partition conjugate(const Partition& lam) {
  if (lam.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(lam[0]), 0);
  for (int row : lam.parts())
    for (int j = 0; j < row; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

bool in_hook(const Partition& lam, int k, int l) {
  if (k < 0 || l < 0 || k + l < 1)
    throw std::invalid_argument("in_hook requires k, l >= 0 and k + l >= 1");
  return lam[k] <= l;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

Partition HookSplit::reassemble() const {
  std::vector<int> rows;
  for (int i = 0; i < k; ++i) rows.push_back(lambda0[i] + mu[i]);
  Partition leg = conjugate(nu);
  for (int x : leg.parts()) rows.push_back(x);
  return Partition(std::move(rows));
}

HookSplit HookSplit::make(Partition lambda0, Partition mu, Partition nu, int k, int l) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid hook split (" + lambda0.str() + ", " + mu.str() +
                                ", " + nu.str() + ") for H(" + std::to_string(k) + "," +
                                std::to_string(l) + "): " + why);
  };
  if (k < 0 || l < 0) fail("negative hook dimension");
  if (lambda0.length() > k || lambda0[0] > l) fail("lambda0 outside the rectangle");
  if (mu.length() > k) fail("mu has more than k parts");
  if (nu.length() > l) fail("nu has more than l parts");
  for (int i = 0; i < mu.length(); ++i)
    if (lambda0[i] != l) fail("arm row over a non-full rectangle row");
  // Leg columns 1..len(nu) need full rectangle columns, i.e. lambda0_k >= len(nu).
  if (nu.length() > 0 && (k == 0 ? l : lambda0[k - 1]) < nu.length())
    fail("leg column under a non-full rectangle column");
  return HookSplit{std::move(lambda0), std::move(mu), std::move(nu), k, l};
}

HookSplit split_hook(const Partition& lam, int k, int l) {
  if (!in_hook(lam, k, l))
    throw std::invalid_argument(lam.str() + " is outside H(" + std::to_string(k) + "," +
                                std::to_string(l) + ")");
  std::vector<int> r0, arm, below;
  for (int i = 0; i < k; ++i) {
    r0.push_back(std::min(lam[i], l));
    arm.push_back(std::max(lam[i] - l, 0));
  }
  for (int i = k; i < lam.length(); ++i) below.push_back(lam[i]);
  return HookSplit{Partition(std::move(r0)), Partition(std::move(arm)),
                   conjugate(Partition(std::move(below))), k, l};
}

mpz_class char_degree(const Partition& lam) {
  Partition conj = conjugate(lam);
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lam.weight()));
  mpz_class den = 1;
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam[i]; ++j) den *= (lam[i] - j - 1) + (conj[j] - i - 1) + 1;
  return num / den;
}

bool in_hook_star_q2(const Partition& lam, int n) {
  if (n < 1) throw std::invalid_argument("in_hook_star_q2 requires n >= 1");
  return lam[n] <= 2 * n && lam[2 * n] <= n;
}

int q2_overlap(const Partition& lam, int n) {
  int count = 0;
  for (int i = n; i < 2 * n; ++i) count += std::max(0, std::min(lam[i], 2 * n) - n);
  return count;
}

namespace {

void partitions_rec(int rem, int max_part, int parts_left, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (rem == 0) {
    out.emplace_back(cur);
    return;
  }
  if (parts_left == 0) return;
  for (int p = std::min(rem, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rem - p, p, parts_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_parts, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, max_part, max_parts, cur, out);
  return out;
}

std::vector<Partition> horizontal_strips(const Partition& lam, int m, int max_parts,
                                         int max_part) {
  std::vector<Partition> out;
  if (m < 0 || lam.length() > max_parts || lam[0] > max_part) return out;
  const int rows = std::min(lam.length() + 1, max_parts);
  if (rows == 0) {
    if (m == 0) out.push_back(lam);
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(rows));
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == rows) {
      if (rem == 0) out.emplace_back(cur);
      return;
    }
    const int lo = lam[i];
    int hi = lo + rem;
    if (i > 0) hi = std::min(hi, lam[i - 1]);
    hi = std::min(hi, max_part);
    for (int b = hi; b >= lo; --b) {
      cur[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, rem - (b - lo));
    }
  };
  rec(rec, 0, m);
  return out;
}

std::vector<Partition> vertical_strips(const Partition& lam, int m, int max_parts,
                                       int max_part) {
  std::vector<Partition> out;
  if (m < 0 || lam.length() > max_parts || lam[0] > max_part) return out;
  const int rows = std::min(lam.length() + m, max_parts);
  std::vector<int> cur(static_cast<std::size_t>(rows));
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (rem > rows - i) return;
    if (i == rows) {
      out.emplace_back(cur);
      return;
    }
    for (int eps = 1; eps >= 0; --eps) {
      if (eps > rem) continue;
      const int b = lam[i] + eps;
      if (b > max_part) continue;
      if (i > 0 && b > cur[static_cast<std::size_t>(i - 1)]) continue;
      cur[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, rem - eps);
    }
  };
  rec(rec, 0, m);
  return out;
}

}  // namespace cochar
