#pragma once

// Exact arithmetic in the real cyclotomic field Q(c), c = 2cos(pi/N).
//
// Elements are coefficient vectors over 1, c, c^2, ..., c^(d-1) where d is
// the degree of the minimal polynomial of c. Values whose coefficients fit
// in 64-bit integers over a common 64-bit denominator are kept in a compact
// form; everything else falls back to GMP rationals. The two forms are
// canonical (a value is stored compactly iff it can be), so equality and
// hashing never depend on the history of a value.

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sortlat {

/// Integer polynomial, coefficients from the constant term upwards.
using IntPoly = std::vector<mpz_class>;

/// Minimal polynomial of 2cos(pi/N) over Q, monic with integer coefficients.
IntPoly minimal_polynomial(unsigned N);

/// Cyclotomic polynomial Phi_m.
IntPoly cyclotomic_polynomial(unsigned m);

/// Renders a polynomial in `var`, highest degree first ("x^2 - x - 1").
std::string format_polynomial(const IntPoly& p, const std::string& var = "x");

class FieldElement;

class RealCycloField {
 public:
  /// Builds Q(2cos(pi/N)). Throws InvalidArgument for N == 0.
  static std::shared_ptr<const RealCycloField> create(unsigned N);

  unsigned N() const { return N_; }
  std::size_t degree() const { return minpoly_.size() - 1; }
  const IntPoly& minpoly() const { return minpoly_; }
  const std::pair<mpq_class, mpq_class>& bracket() const { return bracket_; }

  /// Halves `interval` (which must isolate c) keeping the half containing c.
  std::pair<mpq_class, mpq_class> bisect(const std::pair<mpq_class, mpq_class>& interval) const;

  /// Floating approximation of c.
  double generator_value() const { return c_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement constant(const mpq_class& q) const;
  FieldElement constant(long value) const;
  /// The element c itself.
  FieldElement generator() const;
  /// 2cos(k pi / N) for 0 <= k <= N.
  FieldElement embed_2cos(unsigned k) const;
  FieldElement from_coefficients(std::vector<mpq_class> coeffs) const;

 private:
  friend class FieldElement;
  explicit RealCycloField(unsigned N);

  unsigned N_;
  IntPoly minpoly_;
  std::optional<std::vector<std::int64_t>> minpoly_small_;
  std::pair<mpq_class, mpq_class> bracket_;
  int sign_at_lo_ = 0;  // sign of minpoly at bracket_.first
  double c_ = 0;
  std::vector<double> powers_;  // c^i as doubles, i < degree
};

class FieldElement {
 public:
  /// Zero of `field`. The field must outlive the element.
  explicit FieldElement(const RealCycloField& field);

  const RealCycloField& field() const { return *field_; }
  std::vector<mpq_class> coefficients() const;

  bool is_zero() const;
  bool is_one() const;
  /// Exact sign of the real number this element denotes.
  int sign() const;
  double to_double() const;
  /// Multiplicative inverse. Throws InvalidArgument for zero.
  FieldElement inverse() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::size_t hash() const;
  std::string to_string() const;

 private:
  friend class RealCycloField;

  struct Compact {
    boost::container::small_vector<std::int64_t, 8> num;
    std::int64_t den = 1;
  };
  using Wide = std::vector<mpq_class>;

  FieldElement(const RealCycloField& field, Compact c);
  FieldElement(const RealCycloField& field, Wide w);

  void check_same_field(const FieldElement& other) const;
  Wide widened() const;
  void assign_wide(Wide w);
  int exact_sign(const Wide& coeffs) const;

  const RealCycloField* field_;
  std::variant<Compact, Wide> rep_;
};

}  // namespace sortlat
