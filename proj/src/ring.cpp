#include "atiyah/ring.hpp"

#include <sstream>

namespace atiyah {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Ring Ring::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) throw InputError("prime_field: " + std::to_string(p) + " is not prime");
    return Ring(RingKind::Fp, p);
}

Ring Ring::residues(std::uint64_t m) {
    if (m < 2) throw InputError("residues: modulus must be >= 2");
    return Ring(RingKind::Zmod, m);
}

Int Ring::characteristic() const {
    switch (kind_) {
        case RingKind::Z:
        case RingKind::Q: return 0;
        case RingKind::Fp:
        case RingKind::Zmod: return Int(mod_);
    }
    return 0;
}

std::uint64_t Ring::prime() const {
    if (kind_ == RingKind::Fp) return mod_;
    if (kind_ == RingKind::Zmod) {
        // only p^2 moduli are produced internally; report p
        for (std::uint64_t p = 2; p * p <= mod_; ++p) {
            if (mod_ % p == 0) return p;
        }
        return mod_;
    }
    return 0;
}

std::string Ring::to_string() const {
    switch (kind_) {
        case RingKind::Z: return "Z";
        case RingKind::Q: return "Q";
        case RingKind::Fp: return "F" + std::to_string(mod_);
        case RingKind::Zmod: return "Z/" + std::to_string(mod_);
    }
    return "?";
}

Scalar::Scalar(Ring ring, const Rat& q) : ring_(ring), v_(q) {
    if (ring_.kind() != RingKind::Q && boost::multiprecision::denominator(q) != 1) {
        // a/b in a non-fraction ring must resolve to exact division
        Scalar num(ring, boost::multiprecision::numerator(q));
        Scalar den(ring, boost::multiprecision::denominator(q));
        *this = num / den;
        return;
    }
    canonicalize();
}

void Scalar::canonicalize() {
    if (ring_.kind() == RingKind::Fp || ring_.kind() == RingKind::Zmod) {
        Int m(ring_.modulus());
        Int n = boost::multiprecision::numerator(v_) % m;
        if (n < 0) n += m;
        v_ = Rat(n);
    }
}

void Scalar::require_same(const Scalar& o) const {
    if (ring_ != o.ring_) {
        throw MismatchError("scalar ring mismatch: " + ring_.to_string() + " vs " + o.ring_.to_string());
    }
}

bool Scalar::is_unit() const {
    switch (ring_.kind()) {
        case RingKind::Z: return v_ == 1 || v_ == -1;
        case RingKind::Q: return v_ != 0;
        case RingKind::Fp: return v_ != 0;
        case RingKind::Zmod: {
            Int g = boost::multiprecision::gcd(numerator(), Int(ring_.modulus()));
            return g == 1;
        }
    }
    return false;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(o);
    Scalar r(*this);
    r.v_ += o.v_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same(o);
    Scalar r(*this);
    r.v_ -= o.v_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(o);
    Scalar r(*this);
    r.v_ *= o.v_;
    r.canonicalize();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.v_ = -r.v_;
    r.canonicalize();
    return r;
}

namespace {

// extended gcd on cpp_int: g = ax + by
Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return boost::multiprecision::abs(a);
    }
    Int x1, y1;
    Int g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

}  // namespace

Scalar Scalar::inverse() const {
    switch (ring_.kind()) {
        case RingKind::Z:
            if (is_unit()) return *this;
            throw Error("inverse of non-unit integer " + to_string());
        case RingKind::Q:
            if (v_ == 0) throw Error("inverse of zero");
            return Scalar(ring_, Rat(1) / v_);
        case RingKind::Fp:
        case RingKind::Zmod: {
            Int m(ring_.modulus());
            Int x, y;
            Int g = egcd(numerator(), m, x, y);
            if (g != 1) throw Error("inverse of non-unit " + to_string() + " in " + ring_.to_string());
            return Scalar(ring_, x);
        }
    }
    throw Error("inverse: unreachable");
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same(o);
    if (ring_.kind() == RingKind::Q) {
        if (o.v_ == 0) throw Error("division by zero");
        return Scalar(ring_, v_ / o.v_);
    }
    if (ring_.kind() == RingKind::Z) {
        if (o.v_ == 0) throw Error("division by zero");
        Int a = numerator(), b = o.numerator();
        if (a % b != 0) throw Error("inexact integer division " + to_string() + " / " + o.to_string());
        return Scalar(ring_, a / b);
    }
    return *this * o.inverse();
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = Scalar::one(ring_);
    Scalar b = *this;
    while (e) {
        if (e & 1) r *= b;
        if (e >>= 1) b *= b;
    }
    return r;
}

Scalar Scalar::convert(Ring target) const {
    if (ring_ == target) return *this;
    switch (ring_.kind()) {
        case RingKind::Z:
            return Scalar(target, numerator());
        case RingKind::Q:
            if (target.kind() == RingKind::Z) {
                if (denominator() != 1) throw Error("convert: " + to_string() + " is not an integer");
                return Scalar(target, numerator());
            }
            if (target.kind() == RingKind::Fp || target.kind() == RingKind::Zmod) {
                Scalar den(target, denominator());
                return Scalar(target, numerator()) * den.inverse();
            }
            break;
        case RingKind::Fp:
            if (target.kind() == RingKind::Zmod && target.modulus() % ring_.modulus() == 0) {
                return Scalar(target, numerator());  // canonical representative lift
            }
            if (target.kind() == RingKind::Z) return Scalar(target, numerator());
            break;
        case RingKind::Zmod:
            if (target.kind() == RingKind::Fp && ring_.modulus() % target.modulus() == 0) {
                return Scalar(target, numerator());
            }
            break;
        default: break;
    }
    throw Error("convert: no canonical map " + ring_.to_string() + " -> " + target.to_string());
}

Scalar Scalar::divide_by_p_exact() const {
    if (ring_.kind() != RingKind::Zmod) throw Error("divide_by_p_exact: ring is " + ring_.to_string());
    std::uint64_t p = ring_.prime();
    Int n = numerator();
    if (n % p != 0) throw Error("divide_by_p_exact: " + to_string() + " not divisible by " + std::to_string(p));
    return Scalar(Ring::prime_field(p), n / p);
}

bool Scalar::fits_int64(std::int64_t& out) const {
    if (denominator() != 1) return false;
    Int n = numerator();
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) return false;
    out = static_cast<std::int64_t>(n);
    return true;
}

std::string Scalar::to_string() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

Int binomial_int(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

Int factorial_int(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Scalar binomial_scalar(Ring ring, long n, long k) { return Scalar(ring, binomial_int(n, k)); }

}  // namespace atiyah
