#include "tropcheck/normal_form.hpp"

#include "tropcheck/polyhedron.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropcheck {

Rational min_value(const FormSet& forms, std::span<const Rational> x) {
  if (forms.empty()) throw std::invalid_argument("min_value: empty form set");
  Rational best = forms.front()(x);
  for (std::size_t i = 1; i < forms.size(); ++i) {
    Rational v = forms[i](x);
    if (v < best) best = std::move(v);
  }
  return best;
}

Rational NormalForm::operator()(std::span<const Rational> x) const {
  return min_value(numer, x) - min_value(denom, x);
}

FormSet prune_redundant(FormSet forms) {
  // Sorted order puts the smallest constant first among equal coefficient vectors.
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end(),
                          [](const LinearForm& a, const LinearForm& b) { return a.coeffs == b.coeffs; }),
              forms.end());
  if (forms.size() <= 1) return forms;
  const std::size_t n = forms.front().dim();
  FormSet kept;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    // Region where forms[i] is strictly below every other member.
    Polyhedron region(n);
    for (std::size_t j = 0; j < forms.size(); ++j)
      if (j != i) region.add_ge(forms[j] - forms[i]);
    if (interior_point(region)) kept.push_back(forms[i]);
  }
  return kept;
}

FormSet canonical_set(FormSet forms) { return prune_redundant(std::move(forms)); }

FormSet sumset(const FormSet& a, const FormSet& b) {
  FormSet out;
  out.reserve(a.size() * b.size());
  for (const auto& s : a)
    for (const auto& t : b) out.push_back(s + t);
  return canonical_set(std::move(out));
}

namespace {

// A denominator with a single form d is absorbed: min(A) - d = min(A - d) - 0.
NormalForm fold(NormalForm nf) {
  if (nf.denom.size() != 1 || nf.denom.front() == LinearForm(nf.dim)) return nf;
  const LinearForm d = nf.denom.front();
  for (auto& a : nf.numer) a -= d;
  std::sort(nf.numer.begin(), nf.numer.end());
  nf.denom = {LinearForm(nf.dim)};
  return nf;
}

NormalForm normalize_step(const Expr& e, std::size_t dim);

}  // namespace

NormalForm normalize(const Expr& e, std::size_t dim) { return fold(normalize_step(e, dim)); }

namespace {

NormalForm normalize_step(const Expr& e, std::size_t dim) {
  switch (e.kind()) {
    case Expr::Kind::Lin: {
      if (e.form().dim() != dim) throw std::invalid_argument("normalize: form dimension mismatch");
      return {dim, {e.form()}, {LinearForm(dim)}};
    }
    case Expr::Kind::Neg: {
      NormalForm inner = normalize(e.children()[0], dim);
      std::swap(inner.numer, inner.denom);
      return inner;
    }
    case Expr::Kind::Sum: {
      const NormalForm a = normalize(e.children()[0], dim);
      const NormalForm b = normalize(e.children()[1], dim);
      return {dim, sumset(a.numer, b.numer), sumset(a.denom, b.denom)};
    }
    case Expr::Kind::Min: {
      NormalForm acc = normalize(e.children()[0], dim);
      for (std::size_t i = 1; i < e.children().size(); ++i) {
        const NormalForm next = normalize(e.children()[i], dim);
        // min(A1 - B1, A2 - B2) = min(A1 + B2, A2 + B1) - (B1 + B2)
        FormSet numer = sumset(acc.numer, next.denom);
        const FormSet other = sumset(next.numer, acc.denom);
        numer.insert(numer.end(), other.begin(), other.end());
        acc = {dim, canonical_set(std::move(numer)), sumset(acc.denom, next.denom)};
      }
      return acc;
    }
  }
  throw std::logic_error("normalize: unknown expression kind");
}

}  // namespace

TropicalMap::TropicalMap(std::string n, std::vector<std::string> vars, std::vector<NormalForm> cs)
    : name(std::move(n)), variables(std::move(vars)), coords(std::move(cs)) {
  for (const auto& c : coords)
    if (c.dim != variables.size()) throw std::invalid_argument("TropicalMap: coordinate dimension mismatch");
}

bool TropicalMap::tropical_polynomial() const {
  return std::all_of(coords.begin(), coords.end(), [](const NormalForm& c) { return c.concave(); });
}

Vector eval_expr(const TropicalMap& f, std::span<const Rational> x) {
  if (x.size() != f.dim()) throw std::invalid_argument("eval_expr: point dimension mismatch");
  Vector y;
  y.reserve(f.outputs());
  for (const auto& c : f.coords) y.push_back(c(x));
  return y;
}

}  // namespace tropcheck
