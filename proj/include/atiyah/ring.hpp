#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "atiyah/error.hpp"

namespace atiyah {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

bool is_prime_u64(std::uint64_t n);

enum class RingKind : std::uint8_t { Z, Q, Fp, Zmod };

/// Base ring descriptor: ZZ, QQ, F_p (p prime, runtime parameter) or Z/m
/// (m = p^2 is the only modulus the library constructs itself).
class Ring {
  public:
    static Ring integers() { return Ring(RingKind::Z, 0); }
    static Ring rationals() { return Ring(RingKind::Q, 0); }
    static Ring prime_field(std::uint64_t p);
    static Ring residues(std::uint64_t m);  // Z/m, m >= 2

    RingKind kind() const { return kind_; }
    std::uint64_t modulus() const { return mod_; }

    bool is_field() const { return kind_ == RingKind::Q || kind_ == RingKind::Fp; }
    bool is_exact_division_ring() const { return is_field(); }
    // characteristic as a ring (p for F_p, m for Z/m, 0 otherwise)
    Int characteristic() const;
    // p such that p = 0 kills integer k iff p | k; 0 in characteristic zero
    std::uint64_t prime() const;

    bool operator==(const Ring& o) const { return kind_ == o.kind_ && mod_ == o.mod_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    Ring(RingKind k, std::uint64_t m) : kind_(k), mod_(m) {}
    RingKind kind_;
    std::uint64_t mod_;
};

/// Exact scalar in a base ring. F_p and Z/m values are canonical
/// representatives in [0, m); Q values are reduced fractions.
class Scalar {
  public:
    Scalar() : ring_(Ring::integers()), v_(0) {}
    Scalar(Ring ring, const Int& n) : ring_(ring), v_(n) { canonicalize(); }
    Scalar(Ring ring, long n) : ring_(ring), v_(n) { canonicalize(); }
    Scalar(Ring ring, const Rat& q);

    static Scalar zero(Ring r) { return Scalar(r, 0); }
    static Scalar one(Ring r) { return Scalar(r, 1); }

    const Ring& ring() const { return ring_; }
    const Rat& value() const { return v_; }
    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_unit() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;                   // throws if not a unit
    Scalar operator/(const Scalar& o) const;  // field or exact division
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const { return ring_ == o.ring_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Move the value into another base ring where a canonical map exists:
    /// Z -> anything, F_p -> Z/p^2 (canonical representative lift),
    /// Z/m -> F_p for p | m (reduction), Q -> Z when the denominator is 1.
    Scalar convert(Ring target) const;

    /// For a Z/p^2 scalar divisible by p, return value/p in F_p. Throws when
    /// the division is inexact.
    Scalar divide_by_p_exact() const;

    bool fits_int64(std::int64_t& out) const;

    std::string to_string() const;

  private:
    void canonicalize();
    void require_same(const Scalar& o) const;

    Ring ring_;
    Rat v_;
};

Scalar binomial_scalar(Ring ring, long n, long k);  // exact, then reduced
Int binomial_int(long n, long k);
Int factorial_int(long n);

}  // namespace atiyah
