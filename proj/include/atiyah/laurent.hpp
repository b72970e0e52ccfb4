#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "atiyah/ring.hpp"

namespace atiyah {

using Exponents = std::vector<std::int32_t>;

/// Exponent magnitudes are capped; toy-scale inputs never approach the cap,
/// and tripping it aborts with a diagnostic instead of wrapping around.
inline constexpr std::int64_t kMaxExponent = 1 << 24;

/// Laurent polynomial in a fixed number of variables: a finite map from
/// integer exponent vectors to nonzero scalar coefficients, kept in sorted
/// canonical form so equality is structural.
class LaurentPoly {
  public:
    LaurentPoly(Ring ring, int nvars) : ring_(ring), nvars_(nvars) {}

    static LaurentPoly zero(Ring ring, int nvars) { return LaurentPoly(ring, nvars); }
    static LaurentPoly constant(Ring ring, int nvars, const Scalar& c);
    static LaurentPoly one(Ring ring, int nvars) { return constant(ring, nvars, Scalar::one(ring)); }
    static LaurentPoly monomial(Ring ring, int nvars, const Exponents& e, const Scalar& c);
    static LaurentPoly variable(Ring ring, int nvars, int i, std::int32_t power = 1);

    const Ring& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    const std::map<Exponents, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    /// single term c*x^e with c a unit scalar (the units of a Laurent ring
    /// over a domain; over Z/p^2 the unit polys used here are still monomial)
    bool is_term() const { return terms_.size() == 1; }
    bool is_unit_term() const;

    void add_term(const Exponents& e, const Scalar& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const Scalar& c) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(long e) const;  // negative e needs a unit term
    LaurentPoly term_inverse() const;

    /// Substitute images[i] for variable i. Negative powers require the
    /// image to be a unit term; otherwise this throws.
    LaurentPoly substitute(const std::vector<LaurentPoly>& images) const;

    /// Partial derivative with respect to variable i.
    LaurentPoly derivative(int i) const;

    /// Coefficient-wise ring conversion (see Scalar::convert).
    LaurentPoly convert(Ring target) const;
    /// Coefficient-wise exact division by p: Z/p^2 -> F_p.
    LaurentPoly divide_by_p_exact() const;
    /// Ring-map Frobenius over F_p: c x^e -> c x^{pe}.
    LaurentPoly frobenius() const;

    std::string to_string(const std::vector<std::string>& vars) const;
    std::string to_string() const;

  private:
    void require_compatible(const LaurentPoly& o) const;

    Ring ring_;
    int nvars_;
    std::map<Exponents, Scalar> terms_;
};

/// Parse expressions like "3*x^-1*y^2 - y + 1/2" over the given variables.
/// Sums of monomial terms with integer or a/b coefficients; no parentheses.
LaurentPoly parse_laurent(Ring ring, const std::vector<std::string>& vars, const std::string& text);

}  // namespace atiyah
