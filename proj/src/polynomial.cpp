#include "tropcheck/polynomial.hpp"

#include <stdexcept>

namespace tropcheck {

Polynomial::Polynomial(Vector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences, then expand the Newton basis.
  const std::size_t k = xs.size();
  Vector dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < k; ++level)
    for (std::size_t i = k - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  Polynomial result;
  Polynomial basis(Vector{Rational(1)});
  for (std::size_t i = 0; i < k; ++i) {
    Vector term = basis.coeffs_;
    for (auto& c : term) c *= dd[i];
    Vector sum(std::max(term.size(), result.coeffs_.size()), Rational(0));
    for (std::size_t j = 0; j < term.size(); ++j) sum[j] += term[j];
    for (std::size_t j = 0; j < result.coeffs_.size(); ++j) sum[j] += result.coeffs_[j];
    result = Polynomial(std::move(sum));
    basis = basis * Polynomial(Vector{Rational(-xs[i]), Rational(1)});
  }
  return result;
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  Vector d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
  Vector c = coeffs_;
  for (auto& v : c) v = -v;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  Vector c(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::remainder(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Polynomial::remainder: division by zero polynomial");
  Vector r = coeffs_;
  const int dd = divisor.degree();
  while (static_cast<int>(r.size()) - 1 >= dd && !r.empty()) {
    const Rational factor = r.back() / divisor.leading();
    const std::size_t shift = r.size() - 1 - static_cast<std::size_t>(dd);
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) r[shift + j] -= factor * divisor.coeffs_[j];
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return Polynomial(std::move(r));
}

namespace {

// Exact quotient, for divisors known to divide a.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& d) {
  Vector r = a.coeffs();
  const std::size_t dd = static_cast<std::size_t>(d.degree());
  Vector q(r.size() - dd, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = r[k + dd] / d.leading();
    for (std::size_t j = 0; j <= dd; ++j) r[k + j] -= q[k] * d.coeffs()[j];
  }
  return Polynomial(std::move(q));
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("SturmSequence: zero polynomial");
  chain_.push_back(p);
  Polynomial next = p.derivative();
  while (!next.is_zero()) {
    chain_.push_back(next);
    next = -chain_[chain_.size() - 2].remainder(chain_.back());
  }
  // The last element is gcd(p, p'). Dividing it out gives the chain of the
  // squarefree part, which counts correctly even at multiple roots.
  const Polynomial g = chain_.back();
  if (g.degree() > 0)
    for (auto& q : chain_) q = exact_quotient(q, g);
}

int SturmSequence::variations(const Rational& t) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = sgn(q(t));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  return variations(lo) - variations(hi);
}

namespace {

// Denominators of rational roots divide the leading coefficient of the
// primitive integer multiple of p.
mpz_class integer_leading(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  mpz_class lead = p.leading().get_num() * (l / p.leading().get_den()) / g;
  return abs(lead);
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

const mpz_class kCandidateLimit("1000000000000");

}  // namespace

std::optional<RootLocation> find_root_in(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("find_root_in: empty interval");
  if (p.is_zero()) {
    Rational mid = (lo + hi) / 2;
    return RootLocation{mid, lo, hi};
  }
  if (p(lo) == 0 || p(hi) == 0) throw std::invalid_argument("find_root_in: endpoint is a root");

  const SturmSequence sturm(p);
  if (sturm.count_roots(lo, hi) == 0) return std::nullopt;

  const mpz_class lead = integer_leading(p);
  const bool try_candidates = lead <= kCandidateLimit;
  // Rationals with denominators dividing lead are at least 1/lead^2 apart.
  const Rational separation = try_candidates ? Rational(1, mpz_class(lead * lead)) : Rational(0);

  Rational a = lo, b = hi;
  for (int iter = 0; iter < 400; ++iter) {
    const bool isolated = sturm.count_roots(a, b) == 1;
    if (isolated && (b - a < separation || (!try_candidates && iter >= 64))) break;
    Rational mid = (a + b) / 2;
    if (p(mid) == 0) return RootLocation{mid, a, b};
    if (sturm.count_roots(a, mid) >= 1) {
      b = mid;
    } else {
      a = mid;
    }
  }

  if (try_candidates) {
    for (const auto& q : divisors(lead)) {
      mpz_class k_lo, k_hi;
      Rational qa = a * Rational(q), qb = b * Rational(q);
      mpz_cdiv_q(k_lo.get_mpz_t(), qa.get_num_mpz_t(), qa.get_den_mpz_t());
      mpz_fdiv_q(k_hi.get_mpz_t(), qb.get_num_mpz_t(), qb.get_den_mpz_t());
      for (mpz_class k = k_lo; k <= k_hi; ++k) {
        Rational cand(k, q);
        cand.canonicalize();
        if (cand > a && cand < b && p(cand) == 0) return RootLocation{cand, a, b};
      }
    }
  }
  return RootLocation{std::nullopt, a, b};
}

}  // namespace tropcheck
