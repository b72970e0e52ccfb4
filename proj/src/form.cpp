#include "atiyah/form.hpp"

#include <algorithm>
#include <sstream>

namespace atiyah {

namespace {

// sort idx, return the permutation sign; 0 when an index repeats
int sort_sign(IndexTuple& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i) {
        for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    return sign;
}

}  // namespace

DifferentialForm DifferentialForm::from_poly(const LaurentPoly& p) {
    DifferentialForm f(p.ring(), p.nvars(), 0);
    if (!p.is_zero()) f.comps_.emplace(IndexTuple{}, p);
    return f;
}

DifferentialForm DifferentialForm::basis_form(const LaurentPoly& coeff, const IndexTuple& idx) {
    DifferentialForm f(coeff.ring(), coeff.nvars(), static_cast<int>(idx.size()));
    f.add_component(idx, coeff);
    return f;
}

LaurentPoly DifferentialForm::component(const IndexTuple& idx) const {
    auto it = comps_.find(idx);
    return it == comps_.end() ? LaurentPoly::zero(ring_, nvars_) : it->second;
}

void DifferentialForm::add_component(const IndexTuple& idx, const LaurentPoly& coeff) {
    if (static_cast<int>(idx.size()) != degree_) throw MismatchError("form component of wrong degree");
    if (coeff.ring() != ring_ || coeff.nvars() != nvars_) throw MismatchError("form coefficient mismatch");
    if (coeff.is_zero()) return;
    IndexTuple sorted(idx);
    int sign = sort_sign(sorted);
    if (sign == 0) return;
    for (auto i : sorted) {
        if (i < 0 || i >= nvars_) throw MismatchError("form index out of range");
    }
    LaurentPoly add = (sign > 0) ? coeff : -coeff;
    auto it = comps_.find(sorted);
    if (it == comps_.end()) {
        comps_.emplace(sorted, add);
    } else {
        it->second += add;
        if (it->second.is_zero()) comps_.erase(it);
    }
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
    if (degree_ != o.degree_) throw MismatchError("form degree mismatch in +");
    DifferentialForm r(*this);
    for (const auto& [idx, c] : o.comps_) r.add_component(idx, c);
    return r;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& o) const { return *this + (-o); }

DifferentialForm DifferentialForm::operator-() const {
    DifferentialForm r(ring_, nvars_, degree_);
    for (const auto& [idx, c] : comps_) r.comps_.emplace(idx, -c);
    return r;
}

DifferentialForm DifferentialForm::operator*(const DifferentialForm& o) const {
    if (ring_ != o.ring_ || nvars_ != o.nvars_) throw MismatchError("form chart mismatch in wedge");
    DifferentialForm r(ring_, nvars_, degree_ + o.degree_);
    for (const auto& [i1, c1] : comps_) {
        for (const auto& [i2, c2] : o.comps_) {
            IndexTuple idx(i1);
            idx.insert(idx.end(), i2.begin(), i2.end());
            r.add_component(idx, c1 * c2);
        }
    }
    return r;
}

DifferentialForm DifferentialForm::operator*(const LaurentPoly& p) const {
    DifferentialForm r(ring_, nvars_, degree_);
    for (const auto& [idx, c] : comps_) r.add_component(idx, c * p);
    return r;
}

DifferentialForm DifferentialForm::operator*(const Scalar& s) const {
    DifferentialForm r(ring_, nvars_, degree_);
    for (const auto& [idx, c] : comps_) r.add_component(idx, c * s);
    return r;
}

bool DifferentialForm::operator==(const DifferentialForm& o) const {
    return ring_ == o.ring_ && nvars_ == o.nvars_ && degree_ == o.degree_ && comps_ == o.comps_;
}

DifferentialForm DifferentialForm::d() const {
    DifferentialForm r(ring_, nvars_, degree_ + 1);
    for (const auto& [idx, c] : comps_) {
        for (int i = 0; i < nvars_; ++i) {
            LaurentPoly dc = c.derivative(i);
            if (dc.is_zero()) continue;
            IndexTuple di;
            di.push_back(i);
            di.insert(di.end(), idx.begin(), idx.end());
            r.add_component(di, dc);
        }
    }
    return r;
}

DifferentialForm DifferentialForm::pullback(const std::vector<LaurentPoly>& var_images) const {
    if (static_cast<int>(var_images.size()) != nvars_) throw MismatchError("pullback: wrong image count");
    int out_nvars = var_images.empty() ? 0 : var_images.front().nvars();
    DifferentialForm r(ring_, out_nvars, degree_);
    for (const auto& [idx, c] : comps_) {
        DifferentialForm t = from_poly(c.substitute(var_images));
        for (auto i : idx) t = t * from_poly(var_images[i]).d();
        r += t;
    }
    return r;
}

DifferentialForm DifferentialForm::convert(Ring target) const {
    DifferentialForm r(target, nvars_, degree_);
    for (const auto& [idx, c] : comps_) r.add_component(idx, c.convert(target));
    return r;
}

DifferentialForm DifferentialForm::divide_by_p_exact() const {
    DifferentialForm r(Ring::prime_field(ring_.prime()), nvars_, degree_);
    for (const auto& [idx, c] : comps_) r.add_component(idx, c.divide_by_p_exact());
    return r;
}

std::string DifferentialForm::to_string(const std::vector<std::string>& vars) const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : comps_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string(vars) << ")";
        for (auto i : idx) {
            os << " d" << (i < static_cast<int>(vars.size()) ? vars[i] : "x" + std::to_string(i));
        }
    }
    return os.str();
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) { return a * b; }

}  // namespace atiyah
