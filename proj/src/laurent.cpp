#include "atiyah/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace atiyah {

LaurentPoly LaurentPoly::constant(Ring ring, int nvars, const Scalar& c) {
    LaurentPoly p(ring, nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(Ring ring, int nvars, const Exponents& e, const Scalar& c) {
    LaurentPoly p(ring, nvars);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(Ring ring, int nvars, int i, std::int32_t power) {
    Exponents e(nvars, 0);
    e.at(i) = power;
    return monomial(ring, nvars, e, Scalar::one(ring));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0);
}

Scalar LaurentPoly::constant_term() const {
    auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

bool LaurentPoly::is_unit_term() const { return terms_.size() == 1 && terms_.begin()->second.is_unit(); }

void LaurentPoly::add_term(const Exponents& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != nvars_) throw MismatchError("exponent vector length != nvars");
    if (c.ring() != ring_) throw MismatchError("coefficient ring mismatch");
    for (auto x : e) {
        if (x > kMaxExponent || x < -kMaxExponent) throw GuardError("Laurent exponent overflow");
    }
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentPoly::require_compatible(const LaurentPoly& o) const {
    if (ring_ != o.ring_) throw MismatchError("Laurent ring mismatch");
    if (nvars_ != o.nvars_) throw MismatchError("chart dimension mismatch");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    require_compatible(o);
    LaurentPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    require_compatible(o);
    LaurentPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Scalar& c) const {
    LaurentPoly r(ring_, nvars_);
    for (const auto& [e, a] : terms_) r.add_term(e, a * c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    require_compatible(o);
    LaurentPoly r(ring_, nvars_);
    Exponents e(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return ring_ == o.ring_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::term_inverse() const {
    if (!is_unit_term()) throw Error("term_inverse: not a unit term: " + to_string());
    const auto& [e, c] = *terms_.begin();
    Exponents ie(e);
    for (auto& x : ie) x = -x;
    return monomial(ring_, nvars_, ie, c.inverse());
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e < 0) return term_inverse().pow(-e);
    LaurentPoly r = one(ring_, nvars_);
    LaurentPoly b = *this;
    while (e) {
        if (e & 1) r *= b;
        if (e >>= 1) b *= b;
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw MismatchError("substitute: wrong image count");
    int out_nvars = images.empty() ? 0 : images.front().nvars();
    LaurentPoly r(ring_, out_nvars);
    for (const auto& [e, c] : terms_) {
        LaurentPoly t = constant(ring_, out_nvars, c);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] != 0) t *= images[i].pow(e[i]);
        }
        r += t;
    }
    return r;
}

LaurentPoly LaurentPoly::derivative(int i) const {
    LaurentPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents de(e);
        de[i] -= 1;
        r.add_term(de, c * Scalar(ring_, e[i]));
    }
    return r;
}

LaurentPoly LaurentPoly::convert(Ring target) const {
    LaurentPoly r(target, nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.convert(target));
    return r;
}

LaurentPoly LaurentPoly::divide_by_p_exact() const {
    LaurentPoly r(Ring::prime_field(ring_.prime()), nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.divide_by_p_exact());
    return r;
}

LaurentPoly LaurentPoly::frobenius() const {
    if (ring_.kind() != RingKind::Fp) throw Error("frobenius: base ring is " + ring_.to_string());
    auto p = static_cast<std::int64_t>(ring_.modulus());
    LaurentPoly r(ring_, nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents pe(e);
        for (auto& x : pe) {
            std::int64_t px = p * static_cast<std::int64_t>(x);
            if (px > kMaxExponent || px < -kMaxExponent) throw GuardError("Laurent exponent overflow");
            x = static_cast<std::int32_t>(px);
        }
        r.add_term(pe, c);  // c^p = c in F_p
    }
    return r;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.to_string();
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        first = false;
        bool has_var = false;
        std::ostringstream vs;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (has_var) vs << "*";
            vs << (i < static_cast<int>(vars.size()) ? vars[i] : "x" + std::to_string(i));
            if (e[i] != 1) vs << "^" << e[i];
            has_var = true;
        }
        if (!has_var) {
            os << cs;
        } else if (cs == "1") {
            os << vs.str();
        } else {
            os << cs << "*" << vs.str();
        }
    }
    return os.str();
}

std::string LaurentPoly::to_string() const { return to_string({}); }

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
};

long parse_integer(Cursor& c, const std::string& what) {
    c.skip_ws();
    size_t start = c.i;
    if (c.peek() == '+' || c.peek() == '-') ++c.i;
    size_t digits = c.i;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == digits) throw InputError("expected " + what + " at position " + std::to_string(start) + " in '" + c.s + "'");
    return std::strtol(c.s.substr(start, c.i - start).c_str(), nullptr, 10);
}

std::string parse_name(Cursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (!c.done() && (std::isalnum(static_cast<unsigned char>(c.s[c.i])) || c.s[c.i] == '_')) ++c.i;
    return c.s.substr(start, c.i - start);
}

}  // namespace

LaurentPoly parse_laurent(Ring ring, const std::vector<std::string>& vars, const std::string& text) {
    int nvars = static_cast<int>(vars.size());
    LaurentPoly result(ring, nvars);
    Cursor c{text};
    c.skip_ws();
    if (c.done()) throw InputError("empty polynomial expression");
    bool first = true;
    while (true) {
        c.skip_ws();
        if (c.done()) break;
        int sign = 1;
        if (c.peek() == '+' || c.peek() == '-') {
            if (c.peek() == '-') sign = -1;
            ++c.i;
        } else if (!first) {
            throw InputError("expected '+' or '-' at position " + std::to_string(c.i) + " in '" + text + "'");
        }
        first = false;
        c.skip_ws();
        // term: [coefficient] {*? var [^int]}*
        Scalar coeff = Scalar(ring, sign);
        Exponents e(nvars, 0);
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            long num = parse_integer(c, "number");
            c.skip_ws();
            if (c.peek() == '/') {
                ++c.i;
                long den = parse_integer(c, "denominator");
                coeff = coeff * (Scalar(ring, num) / Scalar(ring, den));
            } else {
                coeff = coeff * Scalar(ring, num);
            }
            saw_factor = true;
        }
        while (true) {
            c.skip_ws();
            if (c.peek() == '*') {
                ++c.i;
                c.skip_ws();
            }
            if (!std::isalpha(static_cast<unsigned char>(c.peek())) && c.peek() != '_') break;
            std::string name = parse_name(c);
            int vi = -1;
            for (int k = 0; k < nvars; ++k) {
                if (vars[k] == name) vi = k;
            }
            if (vi < 0) throw InputError("unknown variable '" + name + "' in '" + text + "'");
            long p = 1;
            c.skip_ws();
            if (c.peek() == '^') {
                ++c.i;
                p = parse_integer(c, "exponent");
            }
            e[vi] += static_cast<std::int32_t>(p);
            saw_factor = true;
        }
        if (!saw_factor) throw InputError("empty term at position " + std::to_string(c.i) + " in '" + text + "'");
        result.add_term(e, coeff);
    }
    return result;
}

}  // namespace atiyah
