#include "antibch/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "antibch/error.hpp"

namespace antibch {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::NotDivisor: return "NotDivisor";
    case ErrorCode::NotSubfield: return "NotSubfield";
    case ErrorCode::CoefficientNotInSubfield: return "CoefficientNotInSubfield";
    case ErrorCode::DeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::RangeUnsupported: return "RangeUnsupported";
    case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::RootCheckFailed: return "RootCheckFailed";
    case ErrorCode::ROutOfRange: return "ROutOfRange";
    case ErrorCode::RepeatedValue: return "RepeatedValue";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto ps = prime_factors(q);
  if (ps.size() != 1) return std::nullopt;
  std::uint32_t e = 0;
  while (q > 1) {
    q /= ps[0];
    ++e;
  }
  return std::make_pair(ps[0], e);
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (base != 0 && r > (std::uint64_t{1} << 62) / base)
      throw Error(ErrorCode::OutOfRange, "power overflows 62 bits");
    r *= base;
  }
  return r;
}

namespace {

using ZP = std::vector<std::uint32_t>;

void trim(ZP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

ZP zp_mod(ZP a, const ZP& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t li = inv_mod(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = std::uint64_t{a.back()} * li % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j)
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - c * f[j] % p) % p);
    trim(a);
  }
  return a;
}

ZP zp_mulmod(const ZP& a, const ZP& b, const ZP& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  ZP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return zp_mod(std::move(r), f, p);
}

ZP zp_gcd(ZP a, ZP b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ZP r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool zp_irreducible(const ZP& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  ZP xp = {0, 1};
  xp = zp_mod(xp, f, p);
  for (std::uint32_t i = 1; i <= k / 2; ++i) {
    // xp <- xp^p mod f
    ZP base = xp, acc = {1};
    std::uint32_t e = p;
    while (e) {
      if (e & 1) acc = zp_mulmod(acc, base, f, p);
      base = zp_mulmod(base, base, f, p);
      e >>= 1;
    }
    xp = acc;
    ZP d = xp;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    if (zp_gcd(f, d, p).size() > 1) return false;
  }
  return true;
}

}  // namespace

FieldPtr Field::make(std::uint64_t p, std::uint32_t k) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::DegreeZero, "extension degree must be positive");
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, k});
  if (it != cache.end()) return it->second;
  FieldPtr f(new Field(static_cast<std::uint32_t>(p), k));
  cache.emplace(std::make_pair(p, k), f);
  return f;
}

Field::Field(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (order > kMaxOrder / p) throw Error(ErrorCode::FieldTooLarge, "field order exceeds 2^40");
    order *= p;
  }
  if (p == 2 && k > 32) throw Error(ErrorCode::FieldTooLarge, "binary extension degree above 32");
  order_ = order;
  pow_p_.resize(k + 1);
  pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= k; ++i) pow_p_[i] = pow_p_[i - 1] * p;

  for (std::uint64_t v = 0; v < order; ++v) {
    ZP f(k + 1, 0);
    std::uint64_t t = v;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    f[k] = 1;
    if (k >= 2 && f[0] == 0) continue;
    if (zp_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }
  if (modulus_.empty()) throw Error(ErrorCode::Internal, "no irreducible polynomial found");
  if (p == 2)
    for (std::uint32_t i = 0; i <= k; ++i)
      if (modulus_[i]) modulus_bits_ |= std::uint64_t{1} << i;

  const std::uint64_t n = order - 1;
  unit_primes_ = prime_factors(n);
  for (std::uint64_t v = 1; v < order; ++v) {
    bool ok = true;
    for (auto r : unit_primes_) {
      if (pow(Elt{v}, n / r) == one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      primitive_ = Elt{v};
      break;
    }
  }
  if (primitive_.value == 0) throw Error(ErrorCode::Internal, "no primitive element found");

  if (order <= kTableLimit) {
    exp_.assign(2 * n, 0);
    log_.assign(order, 0);
    Elt x = one();
    for (std::uint64_t i = 0; i < n; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x.value);
      log_[x.value] = static_cast<std::uint32_t>(i);
      x = mul_poly(x, primitive_);
    }
    for (std::uint64_t i = 0; i < n; ++i) exp_[i + n] = exp_[i];
  }
}

Elt Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Elt{static_cast<std::uint64_t>(r)};
}

Elt Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() > k_) throw Error(ErrorCode::InvalidArgument, "too many coordinates");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p_) throw Error(ErrorCode::InvalidArgument, "coordinate out of range");
    v += c[i] * pow_p_[i];
  }
  return Elt{v};
}

std::vector<std::uint32_t> Field::coeffs(Elt a) const {
  std::vector<std::uint32_t> c(k_);
  std::uint64_t v = a.value;
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = static_cast<std::uint32_t>(v % p_);
    v /= p_;
  }
  return c;
}

Elt Field::add(Elt a, Elt b) const {
  if (p_ == 2) return Elt{a.value ^ b.value};
  std::uint64_t x = a.value, y = b.value, r = 0, w = 1;
  while (x | y) {
    std::uint32_t s = static_cast<std::uint32_t>(x % p_ + y % p_);
    if (s >= p_) s -= p_;
    r += s * w;
    w *= p_;
    x /= p_;
    y /= p_;
  }
  return Elt{r};
}

Elt Field::neg(Elt a) const {
  if (p_ == 2) return a;
  std::uint64_t x = a.value, r = 0, w = 1;
  while (x) {
    const std::uint32_t d = static_cast<std::uint32_t>(x % p_);
    if (d) r += (p_ - d) * w;
    w *= p_;
    x /= p_;
  }
  return Elt{r};
}

Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt Field::scale(std::uint32_t c, Elt a) const {
  c %= p_;
  if (c == 0) return zero();
  if (c == 1) return a;
  std::uint64_t x = a.value, r = 0, w = 1;
  while (x) {
    r += (x % p_) * c % p_ * w;
    w *= p_;
    x /= p_;
  }
  return Elt{r};
}

Elt Field::mul_poly(Elt a, Elt b) const {
  if (a.value == 0 || b.value == 0) return zero();
  if (p_ == 2) {
    std::uint64_t r = 0, x = a.value, y = b.value;
    while (y) {
      if (y & 1) r ^= x;
      x <<= 1;
      y >>= 1;
    }
    for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i)
      if ((r >> i) & 1) r ^= modulus_bits_ << (i - k_);
    return Elt{r};
  }
  std::uint32_t da[64], db[64];
  std::uint64_t prod[128] = {};
  std::uint64_t x = a.value, y = b.value;
  for (std::uint32_t i = 0; i < k_; ++i) {
    da[i] = static_cast<std::uint32_t>(x % p_);
    db[i] = static_cast<std::uint32_t>(y % p_);
    x /= p_;
    y /= p_;
  }
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] += std::uint64_t{da[i]} * db[j];
  }
  for (int i = 2 * static_cast<int>(k_) - 2; i >= static_cast<int>(k_); --i) {
    const std::uint64_t c = prod[i] % p_;
    if (!c) continue;
    const std::uint64_t nc = p_ - c;
    for (std::uint32_t j = 0; j < k_; ++j) prod[i - k_ + j] += nc * modulus_[j];
  }
  std::uint64_t r = 0;
  for (std::uint32_t i = 0; i < k_; ++i) r += (prod[i] % p_) * pow_p_[i];
  return Elt{r};
}

Elt Field::mul(Elt a, Elt b) const {
  if (a.value == 0 || b.value == 0) return zero();
  if (!exp_.empty()) return Elt{exp_[log_[a.value] + log_[b.value]]};
  return mul_poly(a, b);
}

Elt Field::inv_euclid(Elt a) const {
  if (a.value == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  // Extended Euclid on representative polynomials: s*a + t*f = gcd.
  ZP r0 = modulus_, r1 = coeffs(a);
  trim(r1);
  ZP s0 = {}, s1 = {1};
  while (r1.size() > 1) {
    ZP q, r = r0;
    const std::uint32_t li = inv_mod(r1.back(), p_);
    if (r.size() >= r1.size()) q.assign(r.size() - r1.size() + 1, 0);
    while (r.size() >= r1.size() && !r.empty()) {
      const std::uint64_t c = std::uint64_t{r.back()} * li % p_;
      const std::size_t shift = r.size() - r1.size();
      q[shift] = static_cast<std::uint32_t>(c);
      for (std::size_t j = 0; j < r1.size(); ++j)
        r[shift + j] = static_cast<std::uint32_t>((r[shift + j] + p_ - c * r1[j] % p_) % p_);
      trim(r);
    }
    // s2 = s0 - q*s1
    ZP qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j)
        qs[i + j] = static_cast<std::uint32_t>((qs[i + j] + std::uint64_t{q[i]} * s1[j]) % p_);
    ZP s2(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s2.size(); ++i) {
      const std::uint32_t u = i < s0.size() ? s0[i] : 0, v = i < qs.size() ? qs[i] : 0;
      s2[i] = (u + p_ - v) % p_;
    }
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const std::uint32_t c = inv_mod(r1[0], p_);
  for (auto& v : s1) v = static_cast<std::uint32_t>(std::uint64_t{v} * c % p_);
  s1.resize(k_, 0);
  return from_coeffs(s1);
}

Elt Field::inv(Elt a) const {
  if (a.value == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero");
  if (!exp_.empty()) {
    const std::uint64_t n = order_ - 1;
    return Elt{exp_[(n - log_[a.value]) % n]};
  }
  return inv_euclid(a);
}

Elt Field::pow(Elt a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.value == 0) return zero();
  const std::uint64_t n = order_ - 1;
  if (!exp_.empty()) {
    const unsigned __int128 t = static_cast<unsigned __int128>(log_[a.value]) * (e % n);
    return Elt{exp_[static_cast<std::uint64_t>(t % n)]};
  }
  Elt r = one(), b = a;
  e %= n;
  if (e == 0) return one();
  while (e) {
    if (e & 1) r = mul_poly(r, b);
    b = mul_poly(b, b);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::log(Elt a) const {
  if (exp_.empty()) throw Error(ErrorCode::Unsupported, "discrete log needs a table field");
  if (a.value == 0) throw Error(ErrorCode::InvalidArgument, "log of zero");
  return log_[a.value];
}

Elt Field::exp(std::uint64_t e) const {
  if (!exp_.empty()) return Elt{exp_[e % (order_ - 1)]};
  return pow(primitive_, e);
}

std::uint64_t Field::multiplicative_order(Elt a) const {
  if (a.value == 0) throw Error(ErrorCode::InvalidArgument, "order of zero");
  std::uint64_t ord = order_ - 1;
  for (auto r : unit_primes_)
    while (ord % r == 0 && pow(a, ord / r) == one()) ord /= r;
  return ord;
}

Elt nth_root_of_unity(const Field& f, std::uint64_t n) {
  if (n == 0 || (f.order() - 1) % n != 0)
    throw Error(ErrorCode::NotDivisor, std::to_string(n) + " does not divide " + std::to_string(f.order() - 1));
  return f.pow(f.primitive(), (f.order() - 1) / n);
}

namespace {
std::uint32_t subfield_degree(const Field& f, std::uint64_t sub_order) {
  std::uint64_t s = 1;
  for (std::uint32_t j = 1; j <= f.k(); ++j) {
    s *= f.p();
    if (s == sub_order) {
      if (f.k() % j != 0) break;
      return j;
    }
    if (s > sub_order) break;
  }
  throw Error(ErrorCode::NotSubfield, "GF(" + std::to_string(sub_order) + ") is not a subfield of GF(" +
                                          std::to_string(f.order()) + ")");
}
}  // namespace

Elt trace(const Field& f, std::uint64_t sub_order, Elt x) {
  const std::uint32_t j = subfield_degree(f, sub_order);
  Elt s = f.zero(), y = x;
  for (std::uint32_t i = 0; i < f.k() / j; ++i) {
    s = f.add(s, y);
    y = f.pow(y, sub_order);
  }
  return s;
}

bool in_subfield(const Field& f, std::uint64_t sub_order, Elt x) {
  subfield_degree(f, sub_order);
  return f.pow(x, sub_order) == x;
}

Embedding::Embedding(FieldPtr source, FieldPtr target) : source_(std::move(source)), target_(std::move(target)) {
  if (source_->p() != target_->p() || target_->k() % source_->k() != 0)
    throw Error(ErrorCode::NotSubfield, "source field does not embed in target");
  const auto& mod = source_->modulus();
  auto eval = [&](Elt x) {
    Elt acc = target_->zero();
    for (std::size_t i = mod.size(); i-- > 0;)
      acc = target_->add(target_->mul(acc, x), target_->from_int(mod[i]));
    return acc;
  };
  const std::uint64_t q = source_->order();
  std::vector<Elt> cands{target_->zero()};
  const Elt zeta = target_->pow(target_->primitive(), (target_->order() - 1) / (q - 1));
  Elt z = target_->one();
  for (std::uint64_t i = 0; i + 1 < q; ++i) {
    cands.push_back(z);
    z = target_->mul(z, zeta);
  }
  bool found = false;
  for (Elt c : cands) {
    if (eval(c) == target_->zero()) {
      root_ = c;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorCode::Internal, "source modulus has no root in target");
  image_.resize(q);
  for (std::uint64_t v = 0; v < q; ++v) {
    auto c = source_->coeffs(Elt{v});
    Elt acc = target_->zero();
    for (std::size_t i = c.size(); i-- > 0;) acc = target_->add(target_->mul(acc, root_), target_->from_int(c[i]));
    image_[v] = acc;
    reverse_.emplace_back(acc.value, v);
  }
  std::sort(reverse_.begin(), reverse_.end());
}

std::optional<Elt> Embedding::pull_back(Elt b) const {
  auto it = std::lower_bound(reverse_.begin(), reverse_.end(), std::make_pair(b.value, std::uint64_t{0}));
  if (it == reverse_.end() || it->first != b.value) return std::nullopt;
  return Elt{it->second};
}

SmallField::SmallField(const Field& f) {
  if (f.order() > 256) throw Error(ErrorCode::FieldTooLarge, "coefficient field above GF(256)");
  q = static_cast<std::uint32_t>(f.order());
  add.resize(q * q);
  mul.resize(q * q);
  neg.resize(q);
  inv.resize(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    neg[x] = static_cast<std::uint8_t>(f.neg(Elt{x}).value);
    inv[x] = x ? static_cast<std::uint8_t>(f.inv(Elt{x}).value) : 0;
    for (std::uint32_t y = 0; y < q; ++y) {
      add[x * q + y] = static_cast<std::uint8_t>(f.add(Elt{x}, Elt{y}).value);
      mul[x * q + y] = static_cast<std::uint8_t>(f.mul(Elt{x}, Elt{y}).value);
    }
  }
}

}  // namespace antibch
