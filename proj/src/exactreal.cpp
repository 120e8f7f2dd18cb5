#include "sortlat/exactreal.hpp"

#include "sortlat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace sortlat {

namespace {

__extension__ typedef __int128 i128;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic polynomial; throws if there is a remainder.
IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw InvariantViolation("polynomial division: degree too small");
  IntPoly q(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const mpz_class c = num[k];
    q[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (num[i] != 0) throw InvariantViolation("polynomial division left a remainder");
  return q;
}

mpq_class eval_exact(const IntPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

}  // namespace

IntPoly cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw InvalidArgument("cyclotomic_polynomial: m must be positive");
  IntPoly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (unsigned d = 1; d < m; ++d)
    if (m % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
  return p;
}

IntPoly minimal_polynomial(unsigned N) {
  if (N == 0) throw InvalidArgument("minimal_polynomial: N must be positive");
  if (N == 1) return IntPoly{2, 1};  // 2cos(pi) = -2
  IntPoly rest = cyclotomic_polynomial(2 * N);
  const std::size_t d = (rest.size() - 1) / 2;
  // Phi_2N(x) = x^d psi(x + 1/x); peel off psi's coefficients from the top.
  IntPoly psi(d + 1, 0);
  for (std::size_t k = d + 1; k-- > 0;) {
    const mpz_class c = rest[d + k];
    psi[k] = c;
    if (c == 0) continue;
    // x^(d-k) (x^2 + 1)^k
    IntPoly term{1};
    for (std::size_t t = 0; t < k; ++t) term = poly_mul(term, IntPoly{1, 0, 1});
    for (std::size_t i = 0; i < term.size(); ++i) rest[d - k + i] -= c * term[i];
  }
  for (const auto& r : rest)
    if (r != 0) throw InvariantViolation("minimal_polynomial: cyclotomic polynomial is not palindromic");
  return psi;
}

std::string format_polynomial(const IntPoly& p, const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const mpz_class& c = p[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0 || mag != 1) out << mag.get_str();
    if (k >= 1) out << var;
    if (k >= 2) out << "^" << k;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

// ---------------------------------------------------------------------------
// RealCycloField

RealCycloField::RealCycloField(unsigned N) : N_(N), minpoly_(minimal_polynomial(N)) {
  std::vector<std::int64_t> small;
  bool fits = true;
  for (const auto& c : minpoly_) {
    if (!c.fits_slong_p()) {
      fits = false;
      break;
    }
    small.push_back(c.get_si());
  }
  if (fits) minpoly_small_ = std::move(small);

  const long double pi = 3.141592653589793238462643383279502884L;
  const long double c = 2.0L * std::cos(pi / static_cast<long double>(N));
  c_ = static_cast<double>(c);
  long double pw = 1.0L;
  for (std::size_t i = 0; i < degree(); ++i) {
    powers_.push_back(static_cast<double>(pw));
    pw *= c;
  }

  if (degree() == 1) {
    // c = -minpoly[0] is rational.
    const mpq_class root = -mpq_class(minpoly_[0]);
    bracket_ = {root, root};
    return;
  }

  // The other roots are 2cos(k pi/N) with k >= 3, so a width of 2e-9
  // isolates c for every N of practical size; both facts are checked below.
  const mpq_class centre(c_);
  const mpq_class eps(1, 500000000);
  bracket_ = {centre - eps, centre + eps};
  sign_at_lo_ = ::sgn(eval_exact(minpoly_, bracket_.first));
  const int sign_at_hi = ::sgn(eval_exact(minpoly_, bracket_.second));
  if (sign_at_lo_ == 0 || sign_at_hi == 0 || sign_at_lo_ == sign_at_hi)
    throw InvariantViolation("RealCycloField: initial bracket does not isolate 2cos(pi/N)");
  const long double next_root = 2.0L * std::cos(3.0L * pi / static_cast<long double>(N));
  if (next_root >= static_cast<long double>(bracket_.first.get_d()))
    throw InvariantViolation("RealCycloField: bracket may contain a second root (N too large)");

  long double residual = 0, scale = 0;
  pw = 1.0L;
  for (std::size_t i = 0; i < minpoly_.size(); ++i) {
    residual += static_cast<long double>(minpoly_[i].get_d()) * pw;
    scale += std::fabs(static_cast<long double>(minpoly_[i].get_d()) * pw);
    pw *= c;
  }
  if (std::fabs(residual) > 1e-12L * std::max(scale, 1.0L))
    throw InvariantViolation("RealCycloField: minimal polynomial does not vanish at 2cos(pi/N)");
}

std::shared_ptr<const RealCycloField> RealCycloField::create(unsigned N) {
  if (N == 0) throw InvalidArgument("RealCycloField: N must be positive");
  return std::shared_ptr<const RealCycloField>(new RealCycloField(N));
}

std::pair<mpq_class, mpq_class> RealCycloField::bisect(
    const std::pair<mpq_class, mpq_class>& interval) const {
  if (degree() == 1) return interval;
  mpq_class mid = (interval.first + interval.second) / 2;
  const int s = ::sgn(eval_exact(minpoly_, mid));
  if (s == 0) return {mid, mid};  // unreachable for an irreducible minpoly of degree > 1
  if (s == sign_at_lo_) return {mid, interval.second};
  return {interval.first, mid};
}

FieldElement RealCycloField::zero() const { return FieldElement(*this); }

FieldElement RealCycloField::one() const { return constant(1); }

FieldElement RealCycloField::constant(long value) const { return constant(mpq_class(value)); }

FieldElement RealCycloField::constant(const mpq_class& q) const {
  std::vector<mpq_class> coeffs(degree(), 0);
  coeffs[0] = q;
  return from_coefficients(std::move(coeffs));
}

FieldElement RealCycloField::generator() const {
  std::vector<mpq_class> coeffs(degree(), 0);
  if (degree() == 1) {
    coeffs[0] = -mpq_class(minpoly_[0]);
  } else {
    coeffs[1] = 1;
  }
  return from_coefficients(std::move(coeffs));
}

FieldElement RealCycloField::embed_2cos(unsigned k) const {
  if (k > N_) throw InvalidArgument("embed_2cos: k must satisfy 0 <= k <= N");
  FieldElement prev = constant(2);
  if (k == 0) return prev;
  const FieldElement c = generator();
  FieldElement cur = c;
  for (unsigned i = 1; i < k; ++i) {
    FieldElement next = c * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

FieldElement RealCycloField::from_coefficients(std::vector<mpq_class> coeffs) const {
  if (coeffs.size() > degree()) {
    // Reduce modulo the minimal polynomial.
    for (std::size_t k = coeffs.size(); k-- > degree();) {
      const mpq_class c = coeffs[k];
      if (c == 0) continue;
      for (std::size_t i = 0; i <= degree(); ++i) coeffs[k - degree() + i] -= c * minpoly_[i];
    }
  }
  coeffs.resize(degree(), mpq_class(0));
  FieldElement e(*this);
  e.assign_wide(std::move(coeffs));
  return e;
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

using Compact = boost::container::small_vector<std::int64_t, 8>;

bool narrow(i128 v, std::int64_t& out) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    return false;
  out = static_cast<std::int64_t>(v);
  return true;
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// Divides numerators and denominator by their common gcd; den stays positive.
void normalize_compact(Compact& num, std::int64_t& den) {
  if (den == 1) return;
  std::int64_t g = den;
  for (auto v : num) {
    if (g == 1) break;
    g = std::gcd(g, abs64(v));
  }
  if (g > 1) {
    for (auto& v : num) v /= g;
    den /= g;
  }
}

}  // namespace

FieldElement::FieldElement(const RealCycloField& field) : field_(&field), rep_(Compact{}) {
  Compact z;
  z.num.assign(field.degree(), 0);
  rep_ = std::move(z);
}

FieldElement::FieldElement(const RealCycloField& field, Compact c) : field_(&field), rep_(std::move(c)) {}

FieldElement::FieldElement(const RealCycloField& field, Wide w) : field_(&field), rep_(Compact{}) { assign_wide(std::move(w)); }

void FieldElement::check_same_field(const FieldElement& other) const {
  if (field_ != other.field_ && field_->N() != other.field_->N())
    throw InvalidArgument("field mismatch: Q(2cos(pi/" + std::to_string(field_->N()) + ")) vs Q(2cos(pi/" +
                          std::to_string(other.field_->N()) + "))");
}

FieldElement::Wide FieldElement::widened() const {
  if (const auto* w = std::get_if<Wide>(&rep_)) return *w;
  const auto& c = std::get<Compact>(rep_);
  Wide out;
  out.reserve(c.num.size());
  const mpz_class den(static_cast<long>(c.den));
  for (auto v : c.num) {
    mpq_class q(mpz_class(static_cast<long>(v)), den);
    q.canonicalize();
    out.push_back(std::move(q));
  }
  return out;
}

void FieldElement::assign_wide(Wide w) {
  // Demote to the compact form whenever the value allows it.
  mpz_class den = 1;
  for (const auto& q : w) den = lcm(den, mpz_class(q.get_den()));
  bool fits = den.fits_slong_p();
  Compact c;
  if (fits) {
    c.den = den.get_si();
    c.num.reserve(w.size());
    for (const auto& q : w) {
      mpz_class n = q.get_num() * (den / q.get_den());
      if (!n.fits_slong_p()) {
        fits = false;
        break;
      }
      c.num.push_back(n.get_si());
    }
  }
  if (fits) {
    rep_ = std::move(c);
  } else {
    rep_ = std::move(w);
  }
}

std::vector<mpq_class> FieldElement::coefficients() const { return widened(); }

bool FieldElement::is_zero() const {
  if (const auto* c = std::get_if<Compact>(&rep_))
    return std::all_of(c->num.begin(), c->num.end(), [](std::int64_t v) { return v == 0; });
  return false;  // a wide value is never representable compactly, so never zero
}

bool FieldElement::is_one() const {
  const auto* c = std::get_if<Compact>(&rep_);
  if (c == nullptr || c->den != 1 || c->num[0] != 1) return false;
  return std::all_of(c->num.begin() + 1, c->num.end(), [](std::int64_t v) { return v == 0; });
}

double FieldElement::to_double() const {
  if (const auto* c = std::get_if<Compact>(&rep_)) {
    double acc = 0;
    for (std::size_t i = 0; i < c->num.size(); ++i) acc += static_cast<double>(c->num[i]) * field_->powers_[i];
    return acc / static_cast<double>(c->den);
  }
  const auto& w = std::get<Wide>(rep_);
  double acc = 0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i].get_d() * field_->powers_[i];
  return acc;
}

int FieldElement::sign() const {
  if (const auto* c = std::get_if<Compact>(&rep_)) {
    if (field_->degree() == 1) return (c->num[0] > 0) - (c->num[0] < 0);
    // Floating filter with a rigorous error bound; inconclusive cases go to
    // exact interval refinement.
    double acc = 0, mag = 0;
    bool any = false;
    for (std::size_t i = 0; i < c->num.size(); ++i) {
      if (c->num[i] == 0) continue;
      any = true;
      const double term = static_cast<double>(c->num[i]) * field_->powers_[i];
      acc += term;
      mag += std::fabs(term);
    }
    if (!any) return 0;
    if (std::fabs(acc) > 1e-11 * mag) return acc > 0 ? 1 : -1;
  }
  return exact_sign(widened());
}

int FieldElement::exact_sign(const Wide& coeffs) const {
  if (std::all_of(coeffs.begin(), coeffs.end(), [](const mpq_class& q) { return q == 0; })) return 0;
  if (field_->degree() == 1) return ::sgn(coeffs[0]);
  // degree >= 2 means N >= 4, so the bracket lies in (0, 2].
  auto interval = field_->bracket();
  for (int iter = 0; iter < 100000; ++iter) {
    mpq_class lo_pow = 1, hi_pow = 1, lower = 0, upper = 0;
    for (const auto& a : coeffs) {
      if (a >= 0) {
        lower += a * lo_pow;
        upper += a * hi_pow;
      } else {
        lower += a * hi_pow;
        upper += a * lo_pow;
      }
      lo_pow *= interval.first;
      hi_pow *= interval.second;
    }
    if (lower > 0) return 1;
    if (upper < 0) return -1;
    interval = field_->bisect(interval);
  }
  throw InvariantViolation("FieldElement::sign: interval refinement did not separate from zero");
}

FieldElement FieldElement::operator-() const {
  if (const auto* c = std::get_if<Compact>(&rep_)) {
    Compact r = *c;
    bool ok = true;
    for (auto& v : r.num) {
      if (v == std::numeric_limits<std::int64_t>::min()) ok = false;
      v = -v;
    }
    if (ok) return FieldElement(*field_, std::move(r));
  }
  Wide w = widened();
  for (auto& q : w) q = -q;
  return FieldElement(*field_, std::move(w));
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same_field(rhs);
  auto* a = std::get_if<Compact>(&rep_);
  const auto* b = std::get_if<Compact>(&rhs.rep_);
  if (a != nullptr && b != nullptr) {
    const std::size_t d = a->num.size();
    Compact r;
    r.num.resize(d);
    bool ok = true;
    if (a->den == b->den) {
      r.den = a->den;
      for (std::size_t i = 0; i < d && ok; ++i) ok = narrow(i128(a->num[i]) + b->num[i], r.num[i]);
    } else {
      ok = narrow(i128(a->den) * b->den, r.den);
      for (std::size_t i = 0; i < d && ok; ++i)
        ok = narrow(i128(a->num[i]) * b->den + i128(b->num[i]) * a->den, r.num[i]);
    }
    if (ok) {
      normalize_compact(r.num, r.den);
      rep_ = std::move(r);
      return *this;
    }
  }
  Wide x = widened();
  const Wide y = rhs.widened();
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  assign_wide(std::move(x));
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) { return *this += -rhs; }

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same_field(rhs);
  const std::size_t d = field_->degree();
  auto* a = std::get_if<Compact>(&rep_);
  const auto* b = std::get_if<Compact>(&rhs.rep_);
  if (a != nullptr && b != nullptr && field_->minpoly_small_) {
    const auto& mp = *field_->minpoly_small_;
    boost::container::small_vector<i128, 16> prod(2 * d - 1, 0);
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      if (a->num[i] == 0) continue;
      for (std::size_t j = 0; j < d && ok; ++j) {
        const i128 t = i128(a->num[i]) * b->num[j];
        ok = !__builtin_add_overflow(prod[i + j], t, &prod[i + j]);
      }
    }
    for (std::size_t k = 2 * d - 1; ok && k-- > d;) {
      const i128 c = prod[k];
      if (c == 0) continue;
      for (std::size_t i = 0; i < d && ok; ++i) {
        i128 t;
        ok = !__builtin_mul_overflow(c, i128(mp[i]), &t) && !__builtin_sub_overflow(prod[k - d + i], t, &prod[k - d + i]);
      }
    }
    Compact r;
    r.num.resize(d);
    if (ok) ok = narrow(i128(a->den) * b->den, r.den);
    for (std::size_t i = 0; i < d && ok; ++i) ok = narrow(prod[i], r.num[i]);
    if (ok) {
      normalize_compact(r.num, r.den);
      rep_ = std::move(r);
      return *this;
    }
  }
  const Wide x = widened();
  const Wide y = rhs.widened();
  std::vector<mpq_class> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += x[i] * y[j];
  }
  *this = field_->from_coefficients(std::move(prod));
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InvalidArgument("FieldElement::inverse: inversion of zero");
  // Extended Euclid on (minpoly, a) over Q[x]; tracks t with t*a = r (mod minpoly).
  using QPoly = std::vector<mpq_class>;
  auto strip = [](QPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
  };
  auto is_zero_poly = [](const QPoly& p) { return p.size() == 1 && p[0] == 0; };
  auto sub_scaled_shift = [](QPoly& p, const QPoly& q, const mpq_class& c, std::size_t shift) {
    if (p.size() < q.size() + shift) p.resize(q.size() + shift, 0);
    for (std::size_t i = 0; i < q.size(); ++i) p[i + shift] -= c * q[i];
  };

  QPoly r0(field_->minpoly().begin(), field_->minpoly().end());
  QPoly r1 = widened();
  strip(r1);
  QPoly t0{0}, t1{1};
  while (!(r1.size() == 1)) {
    // r0 = q*r1 + rem
    QPoly rem = r0;
    QPoly q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
    while (!is_zero_poly(rem) && rem.size() >= r1.size()) {
      const std::size_t shift = rem.size() - r1.size();
      const mpq_class c = rem.back() / r1.back();
      q[shift] += c;
      sub_scaled_shift(rem, r1, c, shift);
      rem.pop_back();
      if (rem.empty()) rem.push_back(0);
      strip(rem);
    }
    QPoly t2 = t0;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q[i] != 0) sub_scaled_shift(t2, t1, q[i], i);
    strip(t2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
    if (is_zero_poly(r1)) throw InvariantViolation("FieldElement::inverse: minimal polynomial is reducible");
  }
  const mpq_class scale = 1 / r1[0];
  for (auto& c : t1) c *= scale;
  return field_->from_coefficients(std::move(t1));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field_->N() != b.field_->N()) return false;
  const auto* x = std::get_if<FieldElement::Compact>(&a.rep_);
  const auto* y = std::get_if<FieldElement::Compact>(&b.rep_);
  if (x != nullptr && y != nullptr) return x->den == y->den && x->num == y->num;
  if ((x == nullptr) != (y == nullptr)) return false;  // canonical forms differ
  return std::get<FieldElement::Wide>(a.rep_) == std::get<FieldElement::Wide>(b.rep_);
}

std::size_t FieldElement::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  if (const auto* c = std::get_if<Compact>(&rep_)) {
    mix(std::hash<std::int64_t>{}(c->den));
    for (auto v : c->num) mix(std::hash<std::int64_t>{}(v));
  } else {
    for (const auto& q : std::get<Wide>(rep_)) mix(std::hash<std::string>{}(q.get_str()));
  }
  return h;
}

std::string FieldElement::to_string() const {
  const Wide w = widened();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    mpq_class mag = abs(w[i]);
    if (first) {
      if (w[i] < 0) out << "-";
    } else {
      out << (w[i] < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << (i == 0 || mag != 1 ? "*c" : "c");
    if (i >= 2) out << "^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace sortlat
