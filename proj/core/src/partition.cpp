#include "slab/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace slab {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) fail(errc::bad_input, "non-positive part in partition");
    if (i && parts[i] > parts[i - 1])
      fail(errc::bad_input, "partition parts must be weakly decreasing");
  }
}

int Partition::n() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Partition::conjugate() const {
  Partition c;
  for (int i = 1; i <= first(); ++i) {
    int count = 0;
    for (int p : parts)
      if (p >= i) ++count;
    c.parts.push_back(count);
  }
  return c;
}

long long Partition::n_stat() const {
  long long s = 0;
  for (size_t i = 0; i < parts.size(); ++i) s += (long long)i * parts[i];
  return s;
}

std::string Partition::to_string() const {
  if (parts.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "+" : "") << parts[i];
  return os.str();
}

bool dominated_by(const Partition& a, const Partition& b) {
  if (a.n() != b.n()) fail(errc::domain, "dominance needs equal weight");
  int sa = 0, sb = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

Partition coordinatewise_sum(const Partition& a, const Partition& b) {
  std::vector<int> p;
  int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) p.push_back(a.part(i) + b.part(i));
  return Partition(p);
}

Partition union_sum(const Partition& a, const Partition& b) {
  std::vector<int> p = a.parts;
  p.insert(p.end(), b.parts.begin(), b.parts.end());
  std::sort(p.begin(), p.end(), std::greater<int>());
  return Partition(p);
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace slab
