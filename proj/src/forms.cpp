#include "hermlie/forms.hpp"

#include "hermlie/error.hpp"

#include <algorithm>
#include <bit>

namespace hermlie {

namespace {

using Mask = KForm::Mask;

void require_same_dim(const KForm& a, const KForm& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "forms live on different spaces");
}

/// Sign of e^A ^ e^B relative to e^{A u B}: (-1)^{#{(a,b): a in A, b in B, a > b}}.
int merge_sign(Mask a, Mask b) {
  int inversions = 0;
  while (b != 0) {
    int lowest = std::countr_zero(b);
    b &= b - 1;
    Mask above = a & ~((Mask(2) << lowest) - 1);
    inversions += std::popcount(above);
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

int wedge_sign(KForm::Mask a, KForm::Mask b) { return merge_sign(a, b); }

KForm::KForm(std::size_t ambient_dim, std::size_t degree) : ambient_dim_(ambient_dim), degree_(degree) {
  if (ambient_dim > kMaxDim) throw Error(ErrorCode::DimensionMismatch, "forms support dim <= 31");
  if (degree > ambient_dim) throw Error(ErrorCode::DimensionMismatch, "degree exceeds dimension");
}

KForm KForm::basis(std::size_t ambient_dim, const std::vector<int>& indices) {
  KForm f(ambient_dim, indices.size());
  std::vector<int> sorted = indices;
  int sign = 1;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = 0; j + 1 < sorted.size() - i; ++j)
      if (sorted[j] > sorted[j + 1]) {
        std::swap(sorted[j], sorted[j + 1]);
        sign = -sign;
      }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return f;
  f.add_term(indices_mask(sorted), Scalar(sign));
  return f;
}

KForm KForm::constant(std::size_t ambient_dim, const Scalar& value) {
  KForm f(ambient_dim, 0);
  f.add_term(0, value);
  return f;
}

KForm KForm::one_form(const Vector& coefficients) {
  KForm f(coefficients.size(), 1);
  for (std::size_t i = 0; i < coefficients.size(); ++i) f.add_term(Mask(1) << i, coefficients[i]);
  return f;
}

Scalar KForm::coefficient(Mask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar KForm::coefficient(const std::vector<int>& indices) const {
  return coefficient(indices_mask(indices));
}

void KForm::add_term(Mask mask, const Scalar& value) {
  if (value == 0) return;
  if (static_cast<std::size_t>(std::popcount(mask)) != degree_ ||
      (ambient_dim_ < 32 && (mask >> ambient_dim_) != 0))
    throw Error(ErrorCode::DimensionMismatch, "term does not match the form's degree or dimension");
  auto [it, inserted] = terms_.emplace(mask, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

KForm& KForm::operator+=(const KForm& other) {
  require_same_dim(*this, other);
  if (degree_ != other.degree_) throw Error(ErrorCode::DimensionMismatch, "degrees differ");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& other) {
  require_same_dim(*this, other);
  if (degree_ != other.degree_) throw Error(ErrorCode::DimensionMismatch, "degrees differ");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

KForm& KForm::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string KForm::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::vector<int>, Scalar>> sorted;
  for (const auto& [m, c] : terms_) sorted.emplace_back(mask_indices(m), c);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : sorted) {
    Scalar mag = abs_value(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    bool unit = mag == 1 && !idx.empty();
    if (!unit) out += hermlie::to_string(mag);
    if (!idx.empty()) {
      out += "e^{";
      for (int i : idx) out += std::to_string(i);
      out += "}";
    }
  }
  return out;
}

std::vector<Scalar> KForm::dense_coefficients() const {
  std::vector<Scalar> out;
  for (Mask m : masks_of_degree(ambient_dim_, degree_)) out.push_back(coefficient(m));
  return out;
}

KForm operator+(KForm a, const KForm& b) { return a += b; }
KForm operator-(KForm a, const KForm& b) { return a -= b; }
KForm operator*(const Scalar& c, KForm a) { return a *= c; }

std::vector<int> mask_indices(Mask mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i + 1);
  return out;
}

Mask indices_mask(const std::vector<int>& indices) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 1 || i > static_cast<int>(KForm::kMaxDim))
      throw Error(ErrorCode::IndexOutOfRange, "form index out of range");
    m |= Mask(1) << (i - 1);
  }
  return m;
}

std::vector<Mask> masks_of_degree(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  const Mask limit = Mask(1) << n;
  for (Mask m = 0; m < limit; ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == k) out.push_back(m);
  return out;
}

KForm wedge(const KForm& a, const KForm& b) {
  require_same_dim(a, b);
  if (a.degree() + b.degree() > a.ambient_dim())
    return KForm(a.ambient_dim(), std::min(a.ambient_dim(), a.degree() + b.degree()));
  KForm out(a.ambient_dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      Scalar v = ca * cb;
      if (merge_sign(ma, mb) < 0) v = -v;
      out.add_term(ma | mb, v);
    }
  return out;
}

KForm wedge_power(const KForm& a, std::size_t k) {
  KForm out = KForm::constant(a.ambient_dim(), 1);
  for (std::size_t i = 0; i < k; ++i) out = wedge(out, a);
  return out;
}

Scalar evaluate(const KForm& form, const std::vector<Vector>& vectors) {
  if (vectors.size() != form.degree())
    throw Error(ErrorCode::DimensionMismatch, "evaluate needs exactly degree-many vectors");
  for (const auto& v : vectors)
    if (v.size() != form.ambient_dim())
      throw Error(ErrorCode::DimensionMismatch, "vector length differs from form dimension");
  const std::size_t k = form.degree();
  Scalar total = 0;
  for (const auto& [mask, c] : form.terms()) {
    std::vector<int> idx = mask_indices(mask);
    Matrix m(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) m(a, b) = vectors[b][static_cast<std::size_t>(idx[a] - 1)];
    total += c * determinant(std::move(m));
  }
  if (k == 0) total = form.coefficient(Mask(0));
  return total;
}

KForm differential_of_dual(const LieAlgebra& lie, std::size_t i) {
  KForm d(lie.dim(), 2);
  for (const auto& c : lie.constants())
    if (static_cast<std::size_t>(c.k - 1) == i)
      d.add_term((Mask(1) << (c.i - 1)) | (Mask(1) << (c.j - 1)), -c.value);
  return d;
}

KForm ce_differential(const LieAlgebra& lie, const KForm& form) {
  if (form.ambient_dim() != lie.dim())
    throw Error(ErrorCode::DimensionMismatch, "form and algebra dimensions differ");
  const std::size_t n = lie.dim();
  if (form.degree() >= n) return KForm(n, std::min(n, form.degree() + 1));
  std::vector<KForm> d_dual;
  for (std::size_t i = 0; i < n; ++i) d_dual.push_back(differential_of_dual(lie, i));

  // d(e^{i_1} ^ ... ^ e^{i_k}) = sum_a (-1)^{a} e^{i_1} ^ .. ^ de^{i_a} ^ .. ^ e^{i_k}, a 0-based.
  KForm out(n, form.degree() + 1);
  for (const auto& [mask, c] : form.terms()) {
    std::vector<int> idx = mask_indices(mask);
    for (std::size_t a = 0; a < idx.size(); ++a) {
      const KForm& de = d_dual[static_cast<std::size_t>(idx[a] - 1)];
      if (de.is_zero()) continue;
      Mask before = 0, after = 0;
      for (std::size_t b = 0; b < idx.size(); ++b) {
        if (b < a) before |= Mask(1) << (idx[b] - 1);
        if (b > a) after |= Mask(1) << (idx[b] - 1);
      }
      for (const auto& [dm, dc] : de.terms()) {
        if ((dm & before) || (dm & after)) continue;
        int sign = (a % 2 == 0 ? 1 : -1) * merge_sign(before, dm) * merge_sign(before | dm, after);
        Scalar v = c * dc;
        if (sign < 0) v = -v;
        out.add_term(before | dm | after, v);
      }
    }
  }
  return out;
}

KForm pullback(const Matrix& m, const KForm& form) {
  const std::size_t n = form.ambient_dim();
  if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::DimensionMismatch, "pullback shape mismatch");
  // M^* e^i = sum_j M_{ij} e^j; pull back covector by covector.
  std::vector<KForm> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(KForm::one_form(m.row(i)));
  KForm out(n, form.degree());
  for (const auto& [mask, c] : form.terms()) {
    KForm term = KForm::constant(n, c);
    for (int i : mask_indices(mask)) term = wedge(term, images[static_cast<std::size_t>(i - 1)]);
    out += term;
  }
  return out;
}

}  // namespace hermlie
