#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "negbeta/algebraic.hpp"
#include "negbeta/error.hpp"

namespace negbeta {

namespace {

using Complex = std::complex<long double>;

Complex eval(const std::vector<long double>& c, Complex z) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// All complex roots by Aberth-Ehrlich iteration followed by Newton polishing.
std::vector<Complex> numeric_roots(const IntPolynomial& p) {
  const int d = p.degree();
  std::vector<long double> c(static_cast<std::size_t>(d + 1));
  const long double lead = p.leading().get_d();
  for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = p.coeff(i).get_d() / lead;
  std::vector<long double> dc(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) dc[static_cast<std::size_t>(i - 1)] = c[static_cast<std::size_t>(i)] * i;

  long double radius = 0;
  for (int i = 0; i < d; ++i) radius = std::max(radius, std::pow(std::fabs(c[static_cast<std::size_t>(i)]), 1.0L / (d - i)));
  radius = std::max(radius, 1.0L);
  std::vector<Complex> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * k / d + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (int k = 0; k < d; ++k) {
      Complex& zk = z[static_cast<std::size_t>(k)];
      const Complex fz = eval(c, zk);
      if (fz == Complex(0)) continue;
      const Complex ratio = fz / eval(dc, zk);
      Complex s = 0;
      for (int j = 0; j < d; ++j) {
        if (j != k) s += 1.0L / (zk - z[static_cast<std::size_t>(j)]);
      }
      const Complex step = ratio / (1.0L - ratio * s);
      zk -= step;
      worst = std::max(worst, std::abs(step) / (1 + std::abs(zk)));
    }
    if (worst < 1e-19L) break;
  }
  for (auto& zk : z) {
    for (int i = 0; i < 3; ++i) {
      const Complex df = eval(dc, zk);
      if (df == Complex(0)) break;
      zk -= eval(c, zk) / df;
    }
  }
  return z;
}

struct ExactComplex {
  mpq_class re, im;
};

ExactComplex to_exact(Complex z) {
  return {mpq_class(static_cast<double>(z.real())), mpq_class(static_cast<double>(z.imag()))};
}

mpq_class norm2(const ExactComplex& z) { return z.re * z.re + z.im * z.im; }

// Squared modulus of p(z), computed exactly.
mpq_class poly_norm2(const IntPolynomial& p, const ExactComplex& z) {
  mpq_class re = 0, im = 0;
  for (int i = p.degree(); i >= 0; --i) {
    mpq_class nre = re * z.re - im * z.im + mpq_class(p.coeff(i));
    mpq_class nim = re * z.im + im * z.re;
    re = std::move(nre);
    im = std::move(nim);
  }
  return re * re + im * im;
}

struct Disk {
  Complex center;
  long double radius;
};

// Inclusion disks: each contains a root, and when the disks are pairwise
// disjoint each contains exactly one. Radii come from exact rational
// evaluation at the rounded centers, inflated slightly for the final sqrt.
std::vector<Disk> certified_disks(const IntPolynomial& p) {
  const std::vector<Complex> approx = numeric_roots(p);
  const int d = p.degree();
  std::vector<ExactComplex> ex;
  ex.reserve(approx.size());
  for (auto z : approx) ex.push_back(to_exact(z));
  std::vector<Disk> out;
  const mpq_class lead2 = mpq_class(p.leading()) * p.leading();
  for (int i = 0; i < d; ++i) {
    const ExactComplex& zi = ex[static_cast<std::size_t>(i)];
    mpq_class prod = 1;
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      const ExactComplex& zj = ex[static_cast<std::size_t>(j)];
      prod *= norm2({zi.re - zj.re, zi.im - zj.im});
    }
    if (prod == 0) throw undecidable_error("coincident root approximations");
    const mpq_class r2 = mpq_class(d * d) * poly_norm2(p, zi) / (lead2 * prod);
    const long double r = std::sqrt(static_cast<long double>(r2.get_d())) * (1 + 1e-9L) + 1e-30L;
    out.push_back({Complex(static_cast<long double>(zi.re.get_d()), static_cast<long double>(zi.im.get_d())), r});
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (std::abs(out[i].center - out[j].center) <= out[i].radius + out[j].radius) {
        throw undecidable_error("root inclusion disks overlap for " + p.to_string());
      }
    }
  }
  return out;
}

std::size_t index_of_beta(const std::vector<Disk>& disks, const AlgebraicNumber& x) {
  const long double b = x.to_double();
  std::size_t best = 0;
  long double dist = -1;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const long double di = std::abs(disks[i].center - Complex(b, 0));
    if (dist < 0 || di < dist) {
      dist = di;
      best = i;
    }
  }
  return best;
}

bool is_reciprocal(const IntPolynomial& p) {
  const int d = p.degree();
  for (int i = 0; i <= d; ++i) {
    if (p.coeff(i) != p.coeff(d - i)) return false;
  }
  return true;
}

IntPolynomial negated_argument(const IntPolynomial& p) {
  std::vector<mpz_class> c = p.coefficients();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return IntPolynomial(std::move(c));
}

}  // namespace

const char* to_string(PisotClass c) {
  switch (c) {
    case PisotClass::pisot: return "pisot";
    case PisotClass::perron_not_pisot: return "perron_not_pisot";
    case PisotClass::neither: return "neither";
  }
  return "neither";
}

IntPolynomial minimal_polynomial(const AlgebraicNumber& x) {
  if (auto v = x.exact_value()) return IntPolynomial(std::vector<mpz_class>{-v->get_num(), v->get_den()});
  const IntPolynomial& sf = x.polynomial();
  if (sf.degree() <= 2) return sf;
  const std::vector<Complex> roots = numeric_roots(sf);
  const long double b = x.to_double();
  std::size_t beta = 0;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (std::abs(roots[i] - Complex(b, 0)) < std::abs(roots[beta] - Complex(b, 0))) beta = i;
  }
  // Group the other roots into real roots and conjugate pairs.
  std::vector<std::vector<Complex>> units;
  std::vector<bool> used(roots.size(), false);
  used[beta] = true;
  const long double tiny = 1e-12L;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    if (std::fabs(roots[i].imag()) <= tiny * (1 + std::abs(roots[i]))) {
      units.push_back({Complex(roots[i].real(), 0)});
      continue;
    }
    std::size_t partner = i;
    long double best = -1;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (used[j]) continue;
      const long double dj = std::abs(roots[j] - std::conj(roots[i]));
      if (best < 0 || dj < best) {
        best = dj;
        partner = j;
      }
    }
    if (partner == i) return sf;
    used[partner] = true;
    units.push_back({roots[i], std::conj(roots[i])});
  }
  if (units.size() > 22) return sf;
  const long double lead = sf.leading().get_d();
  auto [blo, bhi] = x.interval();
  // Subsets in order of increasing size, so the first hit is irreducible.
  const std::size_t u = units.size();
  for (std::size_t size = 0; size <= u; ++size) {
    std::vector<bool> pick(u, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<Complex> prod{Complex(lead, 0)};
      auto multiply = [&prod](Complex root) {
        std::vector<Complex> next(prod.size() + 1, Complex(0));
        for (std::size_t k = 0; k < prod.size(); ++k) {
          next[k + 1] += prod[k];
          next[k] -= prod[k] * root;
        }
        prod = std::move(next);
      };
      multiply(Complex(b, 0));
      for (std::size_t k = 0; k < u; ++k) {
        if (!pick[k]) continue;
        for (auto r : units[k]) multiply(r);
      }
      std::vector<mpz_class> coeffs;
      bool ok = true;
      for (auto cf : prod) {
        const long double rounded = std::round(cf.real());
        if (std::fabs(cf.real() - rounded) > 1e-6L * (1 + std::fabs(rounded)) || std::fabs(rounded) > 9e15L) {
          ok = false;
          break;
        }
        coeffs.emplace_back(static_cast<double>(rounded));
      }
      if (ok) {
        IntPolynomial cand = IntPolynomial::primitive_from(IntPolynomial(coeffs).to_rational());
        if (cand.degree() >= 1 && exact_quotient(sf, cand) && SturmSequence(cand).count_roots(blo, bhi) == 1) {
          return cand;
        }
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return sf;
}

PisotReport classify_perron_pisot(const AlgebraicNumber& x) {
  PisotReport rep;
  rep.minimal_polynomial = minimal_polynomial(x);
  rep.algebraic_integer = abs(rep.minimal_polynomial.leading()) == 1;
  if (!rep.algebraic_integer || x.compare(mpq_class(1)) <= 0) return rep;
  if (rep.minimal_polynomial.degree() == 1) {
    rep.classification = PisotClass::pisot;
    rep.margin = 1.0;
    return rep;
  }
  const std::vector<Disk> disks = certified_disks(rep.minimal_polynomial);
  const std::size_t beta = index_of_beta(disks, x);
  long double upper = 0, lower = 0;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    if (i == beta) continue;
    const long double m = std::abs(disks[i].center);
    upper = std::max(upper, m + disks[i].radius);
    lower = std::max(lower, m - disks[i].radius);
  }
  if (upper < 1) {
    rep.classification = PisotClass::pisot;
    rep.margin = static_cast<double>(1 - upper);
    return rep;
  }
  auto [blo, bhi] = x.refine(mpq_class(1, 1000000000));
  const long double beta_lo = static_cast<long double>(blo.get_d()) * (1 - 1e-15L);
  const bool salem_like = is_reciprocal(rep.minimal_polynomial);
  if (lower <= 1 && !salem_like) throw undecidable_error("a conjugate modulus straddles 1");
  // A conjugate -beta has exactly the same modulus.
  const IntPolynomial neg = negated_argument(rep.minimal_polynomial);
  if (gcd(neg, rep.minimal_polynomial).degree() >= 1 && SturmSequence(gcd(neg, rep.minimal_polynomial)).count_roots(blo, bhi) >= 1) {
    return rep;
  }
  if (upper < beta_lo) {
    rep.classification = PisotClass::perron_not_pisot;
    rep.margin = static_cast<double>(beta_lo - upper);
    return rep;
  }
  if (lower > static_cast<long double>(bhi.get_d()) * (1 + 1e-15L)) return rep;
  throw undecidable_error("a conjugate modulus straddles beta");
}

}  // namespace negbeta
