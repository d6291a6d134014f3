#include "radram/cycint.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "radram/errors.hpp"

namespace radram {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw internal_error("CycInt: coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw internal_error("CycInt: coefficient overflow");
  return out;
}

int mobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    n /= q;
    if (n % q == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

struct CycloPoly {
  std::vector<std::int64_t> coeffs;
  std::vector<std::pair<std::size_t, std::int64_t>> terms;  // nonzero, excluding the leading 1
};

CycloPoly build_cyclotomic(std::uint64_t n) {
  std::vector<std::uint64_t> up, down;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 1) up.push_back(d);
    if (mu == -1) down.push_back(d);
  }
  std::vector<std::int64_t> poly{1};
  for (std::uint64_t d : up) {  // poly *= x^d - 1
    std::vector<std::int64_t> next(poly.size() + d, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + d] = checked_add(next[i + d], poly[i]);
      next[i] = checked_add(next[i], -poly[i]);
    }
    poly = std::move(next);
  }
  for (std::uint64_t d : down) {  // poly /= x^d - 1, exactly
    const std::size_t deg = poly.size() - 1;
    std::vector<std::int64_t> q(deg - d + 1, 0);
    // poly[k] = q[k-d] - q[k]
    for (std::size_t k = deg + 1; k-- > d;) q[k - d] = checked_add(poly[k], k < q.size() ? q[k] : 0);
    for (std::size_t k = 0; k < d; ++k) {
      const std::int64_t qk = k < q.size() ? q[k] : 0;
      if (poly[k] != -qk) throw internal_error("cyclotomic_polynomial: inexact division");
    }
    poly = std::move(q);
  }
  CycloPoly out;
  out.coeffs = poly;
  for (std::size_t j = 0; j + 1 < poly.size(); ++j)
    if (poly[j] != 0) out.terms.emplace_back(j, poly[j]);
  return out;
}

const CycloPoly& cyclo(std::uint64_t n) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::unique_ptr<CycloPoly>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<CycloPoly>(build_cyclotomic(n))).first;
  return *it->second;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  return cyclo(n).coeffs;
}

CycInt::CycInt(std::uint64_t order) : order_(order), coeffs_(order, 0) {
  if (order == 0) throw std::invalid_argument("CycInt: order must be positive");
}

CycInt::CycInt(std::uint64_t order, std::vector<std::int64_t> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order == 0) throw std::invalid_argument("CycInt: order must be positive");
  if (coeffs_.size() != order) throw std::invalid_argument("CycInt: coefficient vector must have length N");
}

CycInt CycInt::integer(std::uint64_t order, std::int64_t n) {
  CycInt out(order);
  out.coeffs_[0] = n;
  return out;
}

CycInt CycInt::monomial(std::uint64_t order, std::int64_t c, std::uint64_t e) {
  CycInt out(order);
  out.coeffs_[e % order] = c;
  return out;
}

void CycInt::add_term(std::int64_t c, std::uint64_t e) {
  auto& slot = coeffs_[e % order_];
  slot = checked_add(slot, c);
}

CycInt CycInt::reduced() const {
  const CycloPoly& phi = cyclo(order_);
  const std::size_t deg = phi.coeffs.size() - 1;
  CycInt out = *this;
  auto& v = out.coeffs_;
  for (std::size_t i = order_; i-- > deg;) {
    const std::int64_t c = v[i];
    if (c == 0) continue;
    v[i] = 0;
    const std::size_t base = i - deg;
    for (const auto& [j, pj] : phi.terms) v[base + j] = checked_add(v[base + j], -checked_mul(c, pj));
  }
  return out;
}

bool CycInt::is_reduced() const {
  const std::size_t deg = cyclo(order_).coeffs.size() - 1;
  for (std::size_t i = deg; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycInt::is_zero() const {
  const CycInt r = reduced();
  for (std::int64_t c : r.coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<std::int64_t> CycInt::as_integer() const {
  const CycInt r = reduced();
  for (std::size_t i = 1; i < r.coeffs_.size(); ++i)
    if (r.coeffs_[i] != 0) return std::nullopt;
  return r.coeffs_[0];
}

CycInt CycInt::conj() const {
  CycInt out(order_);
  out.coeffs_[0] = coeffs_[0];
  for (std::size_t e = 1; e < order_; ++e) out.coeffs_[order_ - e] = coeffs_[e];
  return out;
}

CycInt CycInt::exact_div(std::int64_t d) const {
  if (d == 0) throw std::invalid_argument("CycInt: division by zero");
  CycInt out = reduced();
  for (auto& c : out.coeffs_) {
    if (c % d != 0)
      throw internal_error("CycInt: inexact division by " + std::to_string(d) + " of " + to_string());
    c /= d;
  }
  return out;
}

void CycInt::check_same_order(const CycInt& o) const {
  if (order_ != o.order_)
    throw std::invalid_argument("CycInt: order mismatch (" + std::to_string(order_) + " vs " +
                                std::to_string(o.order_) + ")");
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same_order(o);
  for (std::size_t i = 0; i < order_; ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same_order(o);
  for (std::size_t i = 0; i < order_; ++i) coeffs_[i] = checked_add(coeffs_[i], -o.coeffs_[i]);
  return *this;
}

CycInt& CycInt::operator*=(std::int64_t k) {
  for (auto& c : coeffs_) c = checked_mul(c, k);
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  a.check_same_order(b);
  const std::uint64_t n = a.order_;
  CycInt out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      auto& slot = out.coeffs_[(i + j) % n];
      slot = checked_add(slot, checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return out;
}

bool operator==(const CycInt& a, const CycInt& b) {
  if (a.order_ != b.order_) return false;
  return (a - b).is_zero();
}

std::string CycInt::to_string() const {
  const CycInt r = reduced();
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < r.coeffs_.size(); ++e) {
    const std::int64_t c = r.coeffs_[e];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (e == 0) os << mag;
    else {
      if (mag != 1) os << mag << "*";
      os << "z^" << e;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycInt cyc_reduce(const CycInt& x) { return x.reduced(); }

CycInt embed(const CycInt& x, std::uint64_t order) {
  if (order == 0 || order % x.order() != 0)
    throw std::invalid_argument("embed: " + std::to_string(order) + " is not a multiple of " +
                                std::to_string(x.order()));
  const std::uint64_t scale = order / x.order();
  CycInt out(order);
  const auto c = x.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e)
    if (c[e] != 0) out.add_term(c[e], e * scale);
  return out;
}

}  // namespace radram
