#pragma once

// Integer sequences behind the multiplicity bounds, the bounds themselves,
// and certificates checking a computed analysis against them.

#include <string>
#include <vector>

#include "toriq/covering.hpp"
#include "toriq/error.hpp"
#include "toriq/exactmat.hpp"

namespace toriq {

// s_1 = 2, s_n = s_1 ... s_{n-1} + 1
inline Int sylvester(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::OutOfDomain, "sylvester needs n >= 1");
  Int prod = 1, s = 2;
  for (std::size_t i = 1; i < n; ++i) {
    prod *= s;
    s = prod + 1;
  }
  return s;
}

// Least number of facets of an n-polytope with n + r vertices.
inline Int mcmullen(std::size_t n, std::size_t r) {
  if (n < 2 || r < 1) throw Error(ErrorCode::OutOfDomain, "mcmullen needs n >= 2 and r >= 1");
  std::size_t l = n / 2;
  auto binom = [](long a, long b) -> Int {
    if (a < 0 || b < 0 || b > a) return 0;
    return binomial(Int(a), static_cast<unsigned long>(b));
  };
  for (long w = 1;; ++w) {
    long a = w - static_cast<long>(l) - 1;
    if (n % 2 == 0) {
      // (w / l) C(w-l-1, l-1) >= 2l + r
      if (Int(w) * binom(a, static_cast<long>(l) - 1) >= Int(static_cast<unsigned long>(l * (2 * l + r)))) return w;
    } else {
      if (2 * binom(a, static_cast<long>(l)) >= Int(static_cast<unsigned long>(2 * l + r + 1))) return w;
    }
  }
}

// t_{k,n} = k s_{k,1} ... s_{k,n-1}, s_{k,1} = k + 1, s_{k,j} = k s_{k,1} ... s_{k,j-1} + 1
inline Int t_sequence(const Int& k, std::size_t n) {
  if (k < 1 || n < 1) throw Error(ErrorCode::OutOfDomain, "t_sequence needs k >= 1 and n >= 1");
  Int t = k, s = k + 1;
  for (std::size_t j = 1; j < n; ++j) {
    t *= s;
    s = t + 1;
  }
  return t;
}

inline Int akln_bound(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::OutOfDomain, "akln_bound needs n >= 2");
  if (n <= 3) return power(Int(static_cast<unsigned long>(n + 1)), n - 1);
  if (n == 4) return 128;
  Int s = sylvester(n - 1) - 1;
  return 3 * s * s;
}

inline Int fano_bound(std::size_t n, std::size_t r_prime) {
  if (n < 2 || r_prime < 1) throw Error(ErrorCode::OutOfDomain, "fano_bound needs n >= 2 and r' >= 1");
  if (n == 2) return Int(9) / Int(static_cast<unsigned long>(2 + r_prime));
  if (n == 3) return Int(144) / Int(static_cast<unsigned long>(7 + r_prime));
  Int s = sylvester(n) - 1;
  return 2 * s * s / mcmullen(n, r_prime);
}

// Canonical Q-Gorenstein varieties of index k.
inline Int qgorenstein_bound(std::size_t n, std::size_t r_prime, const Int& k) {
  if (n < 2 || r_prime < 1 || k < 1)
    throw Error(ErrorCode::OutOfDomain, "qgorenstein_bound needs n >= 2, r' >= 1 and k >= 1");
  if (n == 2) return fano_bound(2, r_prime);
  if (n == 3) return Int(144) * power(k, 3) / Int(static_cast<unsigned long>(7 + r_prime));
  Int s = sylvester(n) - 1;
  return 2 * s * s * power(k, n) / mcmullen(n, r_prime);
}

// Fake weighted projective spaces of index k, no canonicity assumed.
inline Int fake_wps_bound(std::size_t n, const Int& k) {
  if (n < 2 || k < 1) throw Error(ErrorCode::OutOfDomain, "fake_wps_bound needs n >= 2 and k >= 1");
  if (n == 2) return k == 1 ? Int(3) : Int(2 * k * (k + 1) * (k + 1) / 3);
  if (n == 3) {
    if (k == 1) return 18;
    Int t = t_sequence(k, 3);
    return t * t / (2 * k);
  }
  Int t = t_sequence(k, n);
  return 2 * t * t * power(k, n) / (k * mcmullen(n, 1));
}

// Conjectural extension of fake_wps_bound to higher rank.
inline Int conjecture_bound(std::size_t n, std::size_t r_prime, const Int& k) {
  if (n < 2 || r_prime < 1 || k < 2) throw Error(ErrorCode::OutOfDomain, "conjecture_bound needs n >= 2, r' >= 1, k >= 2");
  if (n == 2) return 2 * k * (k + 1) * (k + 1) / Int(static_cast<unsigned long>(2 + r_prime));
  Int t = t_sequence(k, n);
  if (n == 3) return 4 * t * t / (Int(static_cast<unsigned long>(7 + r_prime)) * k);
  return 2 * t * t * power(k, n) / (k * mcmullen(n, r_prime));
}

enum class Relation { AtMost, Divides };

struct BoundCertificate {
  std::string name;
  std::string inputs;  // e.g. "n=3 r'=4 k=1"
  Relation relation = Relation::AtMost;
  Int value;     // bound, or the divisor for Divides
  Int observed;
  bool satisfied = false;
  bool conjectural = false;
  bool hard = true;  // false when the hypotheses do not hold and the row is informative only
  std::string note;

  bool operator==(const BoundCertificate&) const = default;
};

inline BoundCertificate at_most(std::string name, std::string inputs, const Int& bound, const Int& observed) {
  BoundCertificate c;
  c.name = std::move(name);
  c.inputs = std::move(inputs);
  c.value = bound;
  c.observed = observed;
  c.satisfied = observed <= bound;
  return c;
}

inline BoundCertificate divides_cert(std::string name, const Int& a, const Int& b) {
  BoundCertificate c;
  c.name = std::move(name);
  c.relation = Relation::Divides;
  c.value = a;
  c.observed = b;
  c.satisfied = a != 0 && mod_floor(b, a) == 0;
  return c;
}

inline std::vector<BoundCertificate> certify(const CoveringData& d) {
  std::vector<BoundCertificate> out;
  std::size_t n = d.n;
  std::size_t rp = std::max(d.r, d.r_polar);
  std::string ins = "n=" + std::to_string(n) + " r'=" + std::to_string(rp) + " k=" + d.k.get_str();
  if (n < 2) return out;

  if (d.k == 1) {
    out.push_back(at_most("fano", ins, fano_bound(n, rp), d.mult));
  } else {
    BoundCertificate c = at_most("qgorenstein", ins, qgorenstein_bound(n, rp, d.k), d.mult);
    if (!d.canonical) {
      c.hard = false;
      c.note = "X is not canonical";
    }
    out.push_back(c);
  }
  if (d.r == 1) {
    BoundCertificate a = at_most("akln", "n=" + std::to_string(n), akln_bound(n), d.mult);
    if (!d.canonical) {
      a.hard = false;
      a.note = "X is not canonical";
    }
    out.push_back(a);
    out.push_back(at_most("fake_wps", "n=" + std::to_string(n) + " k=" + d.k.get_str(), fake_wps_bound(n, d.k), d.mult));
  }
  if (d.k >= 2) {
    BoundCertificate c = at_most("conjecture", ins, conjecture_bound(n, rp, d.k), d.mult);
    c.conjectural = true;
    c.hard = false;
    out.push_back(c);
  }
  out.push_back(divides_cert("mult | h^n g_Q", d.mult, d.g_hat));
  out.push_back(divides_cert("|Q polar| | (-kK_X)^n", d.modulus_Q_polar, d.scaled_degree_X));
  out.push_back(divides_cert("(-kK_X)^n | (-kK_Y)^n", d.scaled_degree_X, d.scaled_degree_Y_k));
  return out;
}

inline bool certificates_pass(const std::vector<BoundCertificate>& cs) {
  for (const auto& c : cs)
    if (c.hard && !c.conjectural && !c.satisfied) return false;
  return true;
}

}  // namespace toriq
