#include "slab/multipartition.hpp"

#include <functional>
#include <sstream>

namespace slab {

int Multipartition::n() const {
  int s = 0;
  for (const auto& p : components) s += p.n();
  return s;
}

std::string Multipartition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < components.size(); ++i)
    os << (i ? ", " : "") << components[i].to_string();
  os << ")";
  return os.str();
}

std::vector<Multipartition> enumerate_multipartitions(int n, int r) {
  if (n < 0 || r < 1) fail(errc::domain, "need n >= 0 and r >= 1");
  std::vector<Multipartition> out;
  std::vector<Partition> cur;
  std::function<void(int, int)> rec = [&](int rest, int slots) {
    if (slots == 1) {
      for (const Partition& p : partitions_of(rest)) {
        cur.push_back(p);
        out.push_back(Multipartition(cur));
        cur.pop_back();
      }
      return;
    }
    for (int w = rest; w >= 0; --w)
      for (const Partition& p : partitions_of(w)) {
        cur.push_back(p);
        rec(rest - w, slots - 1);
        cur.pop_back();
      }
  };
  rec(n, r);
  return out;
}

CompositionM::CompositionM(int a, int b, int c) : m1(a), m2(b), m3(c) {
  if (a < 0 || b < 0 || c < 0) fail(errc::domain, "negative composition part");
}

std::string CompositionM::to_string() const {
  std::ostringstream os;
  os << "(" << m1 << "," << m2 << "," << m3 << ")";
  return os.str();
}

bool leq(const CompositionM& a, const CompositionM& b) {
  if (a.n() != b.n()) fail(errc::domain, "comparison needs equal weight");
  return a.p1() <= b.p1() && a.p2() <= b.p2();
}

std::vector<CompositionM> enumerate_q_n3(int n) {
  std::vector<CompositionM> out;
  for (int m1 = n; m1 >= 0; --m1)
    for (int m2 = n - m1; m2 >= 0; --m2)
      out.push_back(CompositionM(m1, m2, n - m1 - m2));
  return out;
}

std::vector<CompositionM> enumerate_q0_n3(int n) {
  std::vector<CompositionM> out;
  for (int m1 = n; m1 >= 0; --m1) out.push_back(CompositionM(m1, n - m1, 0));
  return out;
}

CompositionM grouping_of(const Multipartition& mp) {
  if (mp.r() != 3) fail(errc::domain, "grouping needs r = 3");
  return CompositionM(mp[0].n(), mp[1].n() + mp[2].n(), 0);
}

}  // namespace slab
