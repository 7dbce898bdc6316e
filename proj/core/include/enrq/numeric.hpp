#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace enrq {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input that violates a documented precondition (degenerate Gram, wrong norm, ...).
struct DomainError : Error {
  using Error::Error;
};

// 2-adic lattice with an odd Jordan constituent; oddity is not modeled.
struct OddConstituentError : Error {
  using Error::Error;
};

// Fixture or serialized object failing an invariant; names the violated clause.
struct ValidationError : Error {
  std::string clause;
  ValidationError(std::string clause_, const std::string& what)
      : Error("validation failed [" + clause_ + "]: " + what), clause(std::move(clause_)) {}
};

struct BudgetError : Error {
  using Error::Error;
};

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
  if (!is_integer(q)) throw DomainError("expected integer, got " + q.get_str());
  return q.get_num();
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& q) { return floor_div(q.get_num(), q.get_den()); }
inline Int ceil_rat(const Rat& q) { return ceil_div(q.get_num(), q.get_den()); }

// floor(sqrt(q)) for q >= 0.
inline Int isqrt_floor(const Rat& q) {
  if (q < 0) throw DomainError("isqrt of negative");
  // floor(sqrt(n/d)) = floor(floor(sqrt(n*d))/d)
  Int nd = q.get_num() * q.get_den();
  Int r;
  mpz_sqrt(r.get_mpz_t(), nd.get_mpz_t());
  return floor_div(r, q.get_den());
}

// ceil(sqrt(q)) for q >= 0.
inline Int isqrt_ceil(const Rat& q) {
  Int f = isqrt_floor(q);
  return (Rat(f) * Rat(f) == q) ? f : f + 1;
}

inline int mod_pow2(const Int& a, int k) {
  Int m = 1;
  m <<= k;
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return static_cast<int>(r.get_si());
}

// Rational with p-free denominator reduced mod p^k (p odd or 2).
inline Int mod_int(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw DomainError("not invertible mod m");
  return r;
}

inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

// p-adic valuation; a != 0.
inline int valuation(Int a, const Int& p) {
  if (a == 0) throw DomainError("valuation of zero");
  int v = 0;
  Int r, q;
  while (true) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    a = q;
    ++v;
  }
  return v;
}

inline int valuation(const Rat& a, const Int& p) {
  return valuation(a.get_num(), p) - valuation(a.get_den(), p);
}

// Legendre symbol of a nonzero unit (gcd(a,p)=1), p odd prime.
inline int legendre(const Int& a, const Int& p) {
  int r = mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
  if (r == 0) throw DomainError("legendre of non-unit");
  return r;
}

inline int legendre(const Rat& a, const Int& p) { return legendre(a.get_num(), p) * legendre(a.get_den(), p); }

}  // namespace enrq
