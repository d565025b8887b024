#include "tropcheck/linear_form.hpp"

#include <stdexcept>

namespace tropcheck {

LinearForm LinearForm::variable(std::size_t dim, std::size_t index, const Rational& scale) {
  LinearForm f(dim);
  f.coeffs.at(index) = scale;
  return f;
}

LinearForm LinearForm::constant_form(std::size_t dim, const Rational& value) {
  LinearForm f(dim);
  f.constant = value;
  return f;
}

bool LinearForm::is_constant() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

Rational LinearForm::operator()(std::span<const Rational> x) const {
  if (x.size() != coeffs.size()) throw std::invalid_argument("LinearForm: dimension mismatch");
  return dot(coeffs, x) + constant;
}

LinearForm LinearForm::operator-() const {
  LinearForm r = *this;
  for (auto& c : r.coeffs) c = -c;
  r.constant = -r.constant;
  return r;
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  if (other.dim() != dim()) throw std::invalid_argument("LinearForm: dimension mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += other.coeffs[i];
  constant += other.constant;
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
  if (other.dim() != dim()) throw std::invalid_argument("LinearForm: dimension mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= other.coeffs[i];
  constant -= other.constant;
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& s) {
  for (auto& c : coeffs) c *= s;
  constant *= s;
  return *this;
}

bool operator==(const LinearForm& a, const LinearForm& b) {
  return a.coeffs == b.coeffs && a.constant == b.constant;
}

bool operator<(const LinearForm& a, const LinearForm& b) {
  if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
  return a.constant < b.constant;
}

LinearForm primitive(const LinearForm& f) {
  mpz_class den_lcm = 1;
  auto absorb_den = [&](const Rational& q) { mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t()); };
  for (const auto& c : f.coeffs) absorb_den(c);
  absorb_den(f.constant);

  mpz_class num_gcd = 0;
  auto absorb_num = [&](const Rational& q) {
    mpz_class scaled = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  };
  for (const auto& c : f.coeffs) absorb_num(c);
  absorb_num(f.constant);
  if (num_gcd == 0) return f;
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return f * scale;
}

std::string format_form(const LinearForm& f, const std::vector<std::string>& names) {
  if (names.size() != f.dim()) throw std::invalid_argument("format_form: dimension mismatch");
  std::string out;
  auto append_term = [&](const Rational& c, const std::string& name) {
    if (c == 0) return;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (name.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += name;
    }
  };
  for (std::size_t i = 0; i < f.dim(); ++i) append_term(f.coeffs[i], names[i]);
  append_term(f.constant, "");
  return out.empty() ? "0" : out;
}

}  // namespace tropcheck
