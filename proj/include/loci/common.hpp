#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace loci {

using Int = mpz_class;
using Rat = mpq_class;

// Point valuation for formula / function evaluation.
using Point = std::map<std::string, Int>;

struct parse_error : std::runtime_error {
  int line;
  int column;
  parse_error(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
        line(line_), column(col_) {}
};

struct resource_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct unsupported_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Floor and ceiling divisions (quotient rounded toward -inf / +inf).
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int cdiv(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// a mod b in [0, |b|).
inline Int fmod_pos(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r < 0) r += abs(b);
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rpow(const Rat& base, const Int& e) {
  if (e >= 0) {
    if (!e.fits_ulong_p()) throw resource_limit_error("exponent too large");
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e.get_ui());
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e.get_ui());
    r.canonicalize();
    return r;
  }
  if (base == 0) throw domain_error("0 raised to a negative power");
  Int me = -e;
  if (!me.fits_ulong_p()) throw resource_limit_error("exponent too large");
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_den().get_mpz_t(), me.get_ui());
  mpz_pow_ui(r.get_den_mpz_t(), base.get_num().get_mpz_t(), me.get_ui());
  r.canonicalize();
  return r;
}

inline long to_long(const Int& a) {
  if (!a.fits_slong_p()) throw resource_limit_error("integer too large for machine word");
  return a.get_si();
}

}  // namespace loci
