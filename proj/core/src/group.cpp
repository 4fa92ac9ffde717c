#include "slab/group.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "slab/gf2packed.hpp"

namespace slab {

unsigned long long sp_order(int n, uint32_t q) {
  unsigned long long order = 1;
  for (int i = 0; i < n * n; ++i) order *= q;
  for (int i = 1; i <= n; ++i) {
    unsigned long long qi = 1;
    for (int j = 0; j < 2 * i; ++j) qi *= q;
    order *= qi - 1;
  }
  return order;
}

unsigned long long gl_order(int n, uint32_t q) {
  unsigned long long qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  unsigned long long order = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

unsigned long long predicted_order(FiniteGroup which, const FormContext& ctx) {
  uint32_t q = ctx.field().order();
  switch (which) {
    case FiniteGroup::Sp:
      return sp_order(ctx.n(), q);
    case FiniteGroup::G_theta:
      return sp_order(ctx.n(), q);
    case FiniteGroup::GL:
      return gl_order(ctx.N(), q);
  }
  return 0;
}

std::vector<Mat> sp_generators(const FormContext& ctx) {
  if (ctx.parity() != Parity::even)
    fail(errc::domain, "Sp generators need the even context");
  Field f = ctx.field();
  int n = ctx.n(), N = ctx.N();
  std::vector<Mat> gens;
  for (uint32_t c = 1; c < f.order(); ++c) {
    uint16_t cc = uint16_t(c);
    // long roots +-2eps_i
    for (int i = 0; i < n; ++i) {
      Mat g = Mat::identity(f, N);
      g.set(i, n + i, cc);
      gens.push_back(g);
      Mat h = Mat::identity(f, N);
      h.set(n + i, i, cc);
      gens.push_back(h);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        // eps_i - eps_j
        Mat g = Mat::identity(f, N);
        g.set(i, j, cc);
        g.set(n + j, n + i, cc);
        gens.push_back(g);
        if (i < j) {
          // +-(eps_i + eps_j)
          Mat p = Mat::identity(f, N);
          p.set(i, n + j, cc);
          p.set(j, n + i, cc);
          gens.push_back(p);
          Mat m = Mat::identity(f, N);
          m.set(n + i, j, cc);
          m.set(n + j, i, cc);
          gens.push_back(m);
        }
      }
  }
  for (const Mat& g : gens)
    if (!membership(g, ctx, GroupKind::Sp))
      fail(errc::membership, "generator fails the Sp predicate");
  return gens;
}

std::vector<Mat> gl_generators(Field f, int N) {
  std::vector<Mat> gens;
  for (uint32_t c = 1; c < f.order(); ++c)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (i == j) continue;
        Mat g = Mat::identity(f, N);
        g.set(i, j, uint16_t(c));
        gens.push_back(g);
      }
  if (f.order() > 2) {
    Mat d = Mat::identity(f, N);
    d.set(0, 0, 2);  // x generates the multiplicative group
    gens.push_back(d);
  }
  return gens;
}

std::vector<Mat> g_theta_generators(const FormContext& ctx) {
  if (ctx.parity() != Parity::odd)
    fail(errc::domain, "G_theta generators are for the odd context");
  FormContext inner(ctx.field(), 2 * ctx.n());
  std::vector<Mat> out;
  for (const Mat& y : sp_generators(inner)) {
    Mat g = Mat::identity(ctx.field(), ctx.N());
    for (int i = 0; i < 2 * ctx.n(); ++i)
      for (int j = 0; j < 2 * ctx.n(); ++j) g.set(1 + i, 1 + j, y.at(i, j));
    out.push_back(g);
  }
  return out;
}

namespace {

bool group_predicate(const Mat& g, const FormContext& ctx, FiniteGroup which) {
  switch (which) {
    case FiniteGroup::Sp:
      return membership(g, ctx, GroupKind::Sp);
    case FiniteGroup::G_theta:
      return membership(g, ctx, GroupKind::G_theta);
    case FiniteGroup::GL:
      return rank(g) == g.rows();
  }
  return false;
}

// All N x N matrices over F_q in bitmask order, filtered by the predicate.
std::vector<Mat> predicate_scan(const FormContext& ctx, FiniteGroup which) {
  Field f = ctx.field();
  int N = ctx.N();
  int cells = N * N;
  std::vector<Mat> out;
  Mat m(f, N, N);
  std::vector<uint16_t>& a = m.data();
  while (true) {
    bool invertible = true;
    for (int i = 0; i < N && invertible; ++i) {
      bool nonzero_row = false;
      for (int j = 0; j < N; ++j) nonzero_row |= m.at(i, j) != 0;
      invertible = nonzero_row;
    }
    if (invertible && group_predicate(m, ctx, which)) out.push_back(m);
    int pos = 0;
    while (pos < cells) {
      if (++a[size_t(pos)] < f.order()) break;
      a[size_t(pos)] = 0;
      ++pos;
    }
    if (pos == cells) break;
  }
  return out;
}

// Generic key for dedup: matrices pack into a uint64 when k*N^2 <= 64.
inline bool fits_u64(const FormContext& ctx) {
  return ctx.field().degree() * ctx.N() * ctx.N() <= 64;
}

uint64_t key_u64(const Mat& m, int kbits) {
  uint64_t key = 0;
  const auto& a = m.data();
  for (size_t i = a.size(); i-- > 0;) key = (key << kbits) | a[i];
  return key;
}

std::vector<Mat> closure(const FormContext& ctx,
                         const std::vector<Mat>& generators,
                         unsigned long long expected) {
  int kbits = ctx.field().degree();
  std::vector<Mat> elements;
  if (fits_u64(ctx)) {
    std::unordered_set<uint64_t> seen;
    seen.reserve(size_t(expected * 2));
    std::vector<Mat> frontier{Mat::identity(ctx.field(), ctx.N())};
    seen.insert(key_u64(frontier[0], kbits));
    elements = frontier;
    while (!frontier.empty()) {
      std::vector<Mat> next;
      for (const Mat& g : frontier)
        for (const Mat& s : generators) {
          Mat h = mul(s, g);
          if (seen.insert(key_u64(h, kbits)).second) {
            next.push_back(h);
            elements.push_back(h);
          }
        }
      frontier = std::move(next);
    }
  } else {
    std::unordered_set<std::string> seen;
    std::vector<Mat> frontier{Mat::identity(ctx.field(), ctx.N())};
    seen.insert(frontier[0].key());
    elements = frontier;
    while (!frontier.empty()) {
      std::vector<Mat> next;
      for (const Mat& g : frontier)
        for (const Mat& s : generators) {
          Mat h = mul(s, g);
          if (seen.insert(h.key()).second) {
            next.push_back(h);
            elements.push_back(h);
          }
        }
      frontier = std::move(next);
    }
  }
  return elements;
}

}  // namespace

bool GroupTable::contains(const Mat& g) const {
  std::string k = g.key();
  auto it = std::lower_bound(
      elements.begin(), elements.end(), k,
      [](const Mat& m, const std::string& key) { return m.key() < key; });
  return it != elements.end() && it->key() == k;
}

GroupTable group_enumerate(const FormContext& ctx, FiniteGroup which,
                           bool unsafe, unsigned long long guard) {
  unsigned long long expected = predicted_order(which, ctx);
  if (!unsafe && expected > guard)
    fail(errc::resource_limit, "group order " + std::to_string(expected) +
                                   " exceeds the enumeration guard");
  GroupTable table{ctx, which, {}, {}, expected};

  double scan_cost = 1;
  for (int i = 0; i < ctx.N() * ctx.N(); ++i) scan_cost *= ctx.field().order();

  if (scan_cost <= double(1 << 22)) {
    table.elements = predicate_scan(ctx, which);
    table.generators = (which == FiniteGroup::GL)
                           ? gl_generators(ctx.field(), ctx.N())
                           : (which == FiniteGroup::G_theta &&
                                      ctx.parity() == Parity::odd
                                  ? g_theta_generators(ctx)
                                  : sp_generators(ctx));
  } else if (which == FiniteGroup::G_theta && ctx.parity() == Parity::odd) {
    // Blocks diag(1, y) for y in Sp_2n: enumerate the inner group and embed.
    FormContext inner(ctx.field(), 2 * ctx.n());
    GroupTable sp = group_enumerate(inner, FiniteGroup::Sp, unsafe, guard);
    for (const Mat& y : sp.elements) {
      Mat g = Mat::identity(ctx.field(), ctx.N());
      for (int i = 0; i < 2 * ctx.n(); ++i)
        for (int j = 0; j < 2 * ctx.n(); ++j) g.set(1 + i, 1 + j, y.at(i, j));
      if (!membership(g, ctx, GroupKind::G_theta))
        fail(errc::membership, "embedded block fails the predicate");
      table.elements.push_back(g);
    }
    table.generators = g_theta_generators(ctx);
  } else {
    table.generators = (which == FiniteGroup::GL)
                           ? gl_generators(ctx.field(), ctx.N())
                           : sp_generators(ctx);
    table.elements = closure(ctx, table.generators, expected);
  }

  if (table.elements.size() != expected)
    fail(errc::closure, "enumerated " + std::to_string(table.elements.size()) +
                            " elements, order formula says " +
                            std::to_string(expected));
  std::sort(table.elements.begin(), table.elements.end(),
            [](const Mat& a, const Mat& b) { return a.key() < b.key(); });
  return table;
}

std::optional<Mat> conjugacy_test(const Mat& x, const Mat& y,
                                  const GroupTable& group) {
  for (const Mat& g : group.elements)
    if (conjugate(g, x) == y) return g;
  return std::nullopt;
}

Mat random_group_element(const std::vector<Mat>& generators, uint64_t seed,
                         int word_length) {
  if (generators.empty()) fail(errc::precondition, "no generators");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, generators.size() - 1);
  Mat g = generators[pick(rng)];
  for (int i = 1; i < word_length; ++i) g = mul(g, generators[pick(rng)]);
  return g;
}

}  // namespace slab
