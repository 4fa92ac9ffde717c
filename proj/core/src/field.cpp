#include "slab/field.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace slab {

const char* errc_name(errc code) {
  switch (code) {
    case errc::field_mismatch: return "field-mismatch";
    case errc::division_by_zero: return "division-by-zero";
    case errc::resource_limit: return "resource-limit";
    case errc::shape: return "shape";
    case errc::nilpotency: return "nilpotency";
    case errc::membership: return "membership";
    case errc::stability: return "stability";
    case errc::semisimplicity: return "semisimplicity";
    case errc::splitting: return "splitting";
    case errc::precondition: return "precondition";
    case errc::domain: return "domain";
    case errc::closure: return "closure";
    case errc::bad_input: return "bad-input";
  }
  return "unknown";
}

namespace {

// Fixed irreducible modulus per degree, coefficients as bitmask including the
// leading x^k term. Degrees 2,3,4 are x^2+x+1, x^3+x+1, x^4+x+1.
constexpr std::array<uint32_t, Field::kMaxDegree + 1> kModulus = {
    0,       // unused
    0x3,     // k=1:  x + 1 (reduction is trivial; GF(2))
    0x7,     // x^2 + x + 1
    0xB,     // x^3 + x + 1
    0x13,    // x^4 + x + 1
    0x25,    // x^5 + x^2 + 1
    0x43,    // x^6 + x + 1
    0x83,    // x^7 + x + 1
    0x11D,   // x^8 + x^4 + x^3 + x^2 + 1
    0x211,   // x^9 + x^4 + 1
    0x409,   // x^10 + x^3 + 1
    0x805,   // x^11 + x^2 + 1
    0x1053,  // x^12 + x^6 + x^4 + x + 1
    0x201B,  // x^13 + x^4 + x^3 + x + 1
    0x4443,  // x^14 + x^10 + x^6 + x + 1
    0x8003,  // x^15 + x + 1
    0x1100B, // x^16 + x^12 + x^3 + x + 1
};

std::array<std::unique_ptr<Field::Tables>, Field::kMaxDegree + 1> g_tables;
std::mutex g_tables_mutex;

}  // namespace

uint16_t polymul_reduce(uint32_t a, uint32_t b, uint32_t modulus, int k) {
  uint32_t prod = 0;
  for (int i = 0; i < 32 && (b >> i) != 0; ++i)
    if ((b >> i) & 1u) prod ^= a << i;
  for (int d = 31; d >= k; --d)
    if ((prod >> d) & 1u) prod ^= modulus << (d - k);
  return uint16_t(prod);
}

Field Field::gf(int k) {
  if (k < 1 || k > kMaxDegree)
    fail(errc::resource_limit,
         "field degree " + std::to_string(k) + " outside 1..16");
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  auto& slot = g_tables[size_t(k)];
  if (!slot) {
    auto tab = std::make_unique<Tables>();
    tab->k = k;
    tab->modulus = kModulus[size_t(k)];
    uint32_t order = uint32_t(1) << k;
    tab->exp.assign(order, 0);
    tab->log.assign(order, 0);
    // x (bitmask 2) generates the multiplicative group for each modulus in
    // the table above except GF(2), where the group is trivial.
    uint16_t g = (k == 1) ? 1 : 2;
    uint16_t v = 1;
    for (uint32_t i = 0; i + 1 < order; ++i) {
      tab->exp[i] = v;
      tab->log[v] = uint16_t(i);
      v = polymul_reduce(v, g, tab->modulus, k);
    }
    if (v != 1)
      fail(errc::domain, "modulus table broken for k=" + std::to_string(k));
    slot = std::move(tab);
  }
  return Field(slot.get());
}

Field Field::parse(const std::string& name) {
  if (name.rfind("gf2^", 0) != 0)
    fail(errc::bad_input, "field name must look like gf2^k, got " + name);
  int k = 0;
  try {
    k = std::stoi(name.substr(4));
  } catch (const std::exception&) {
    fail(errc::bad_input, "bad field degree in " + name);
  }
  return gf(k);
}

std::string Field::name() const {
  return "gf2^" + std::to_string(tab_->k);
}

uint16_t Field::pow(uint16_t a, uint64_t e) const {
  uint16_t r = 1;
  uint16_t base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

uint32_t Field::mult_order(uint16_t a) const {
  if (a == 0) fail(errc::division_by_zero, "order of zero");
  uint32_t n = 1;
  uint16_t v = a;
  while (v != 1) {
    v = mul(v, a);
    ++n;
  }
  return n;
}

std::vector<FieldElem> enumerate(Field field) {
  std::vector<FieldElem> out;
  out.reserve(field.order());
  for (uint32_t b = 0; b < field.order(); ++b)
    out.emplace_back(field, uint16_t(b));
  return out;
}

}  // namespace slab
