#pragma once

#include <map>
#include <string>
#include <vector>

#include "atiyah/laurent.hpp"

namespace atiyah {

using IndexTuple = std::vector<std::int32_t>;  // strictly increasing variable indices

/// Algebraic differential form of a fixed degree on a chart: a finite map
/// from strictly increasing index tuples (i_1 < ... < i_q) to Laurent
/// coefficients. Degree-0 forms are plain Laurent polynomials.
class DifferentialForm {
  public:
    DifferentialForm(Ring ring, int nvars, int degree) : ring_(ring), nvars_(nvars), degree_(degree) {}

    static DifferentialForm zero(Ring ring, int nvars, int degree) { return DifferentialForm(ring, nvars, degree); }
    static DifferentialForm from_poly(const LaurentPoly& p);
    static DifferentialForm one(Ring ring, int nvars) { return from_poly(LaurentPoly::one(ring, nvars)); }
    /// dx_{i_1} ∧ ... ∧ dx_{i_q} with the given Laurent coefficient
    static DifferentialForm basis_form(const LaurentPoly& coeff, const IndexTuple& idx);

    const Ring& ring() const { return ring_; }
    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    const std::map<IndexTuple, LaurentPoly>& components() const { return comps_; }

    bool is_zero() const { return comps_.empty(); }
    LaurentPoly component(const IndexTuple& idx) const;
    void add_component(const IndexTuple& idx, const LaurentPoly& coeff);  // idx need not be sorted

    DifferentialForm operator+(const DifferentialForm& o) const;
    DifferentialForm operator-(const DifferentialForm& o) const;
    DifferentialForm operator-() const;
    /// wedge product; graded-commutative, repeated indices annihilate
    DifferentialForm operator*(const DifferentialForm& o) const;
    DifferentialForm operator*(const LaurentPoly& p) const;
    DifferentialForm operator*(const Scalar& c) const;
    DifferentialForm& operator+=(const DifferentialForm& o) { return *this = *this + o; }
    DifferentialForm& operator-=(const DifferentialForm& o) { return *this = *this - o; }

    bool operator==(const DifferentialForm& o) const;
    bool operator!=(const DifferentialForm& o) const { return !(*this == o); }

    /// exterior derivative
    DifferentialForm d() const;

    /// Pull back along the chart map whose coordinate functions are
    /// var_images: coefficients are substituted and dx_i becomes
    /// d(var_images[i]).
    DifferentialForm pullback(const std::vector<LaurentPoly>& var_images) const;

    DifferentialForm convert(Ring target) const;
    DifferentialForm divide_by_p_exact() const;

    std::string to_string(const std::vector<std::string>& vars) const;
    std::string to_string() const { return to_string({}); }

  private:
    Ring ring_;
    int nvars_;
    int degree_;
    std::map<IndexTuple, LaurentPoly> comps_;
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

}  // namespace atiyah
