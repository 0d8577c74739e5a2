#include "logder/arrangement.hpp"

#include <algorithm>
#include <set>

#include "logder/error.hpp"

namespace logder {

namespace {

RationalMatrix rows_of(std::span<const LinearForm> forms, std::span<const std::size_t> indices, std::size_t ell) {
  RationalMatrix m(indices.size(), ell);
  for (std::size_t r = 0; r < indices.size(); ++r) {
    const LinearForm& f = forms[indices[r]];
    for (std::size_t c = 0; c < ell; ++c) m(r, c) = f[c];
  }
  return m;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

Arrangement::Arrangement(std::size_t ell, std::vector<LinearForm> forms) : ell_(ell), forms_(std::move(forms)) {
  if (ell_ == 0) throw InputError("ambient dimension must be positive");
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (forms_[i].nvars() != ell_) {
      throw InputError("form " + std::to_string(i + 1) + " has " + std::to_string(forms_[i].nvars()) +
                       " coefficients, expected " + std::to_string(ell_));
    }
    if (forms_[i].is_zero()) throw InputError("form " + std::to_string(i + 1) + " is identically zero");
  }
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    for (std::size_t j = i + 1; j < forms_.size(); ++j) {
      if (forms_[i].is_proportional_to(forms_[j])) throw DuplicateHyperplane(i, j);
    }
  }
  const std::size_t r = coefficient_rank(forms_);
  if (r != ell_) throw NonEssential(r, ell_);
}

RationalMatrix Arrangement::coefficient_matrix() const {
  const auto all = iota(forms_.size());
  return rows_of(forms_, all, ell_);
}

bool Arrangement::is_canonical() const {
  if (forms_.size() < ell_) return false;
  for (std::size_t i = 0; i < ell_; ++i) {
    for (std::size_t c = 0; c < ell_; ++c) {
      if (forms_[i][c] != (i == c ? 1 : 0)) return false;
    }
  }
  return true;
}

bool Arrangement::projectively_equal(const Arrangement& other) const {
  if (other.ell_ != ell_ || other.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!forms_[i].is_proportional_to(other.forms_[i])) return false;
  }
  return true;
}

std::size_t subset_rank(std::span<const LinearForm> forms, std::span<const std::size_t> indices) {
  if (indices.empty()) return 0;
  return rank(rows_of(forms, indices, forms[indices[0]].nvars()));
}

std::size_t coefficient_rank(std::span<const LinearForm> forms) {
  if (forms.empty()) return 0;
  const auto all = iota(forms.size());
  return subset_rank(forms, all);
}

Polynomial defining_polynomial(const Arrangement& a) {
  Polynomial q = Polynomial::constant(a.ell(), 1);
  for (const auto& f : a.forms()) q = q * f.to_polynomial();
  return q;
}

bool point_in_complement(const Arrangement& a, std::span<const Rational> point) {
  if (point.size() != a.ell()) throw InputError("point dimension does not match arrangement");
  return std::none_of(a.forms().begin(), a.forms().end(),
                      [&](const LinearForm& f) { return f.evaluate(point) == 0; });
}

bool ChangeOfBasis::is_identity() const {
  if (matrix != RationalMatrix::identity(matrix.rows())) return false;
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    if (permutation[i] != i) return false;
  }
  return true;
}

CanonicalForm to_canonical(const Arrangement& a) {
  const std::size_t ell = a.ell();
  const std::size_t n = a.size();
  // Greedy selection in index order yields the lexicographically first basis.
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < n && basis.size() < ell; ++i) {
    basis.push_back(i);
    if (subset_rank(a.forms(), basis) < basis.size()) basis.pop_back();
  }
  if (basis.size() < ell) throw NonEssential(basis.size(), ell);

  std::vector<std::size_t> permutation = basis;
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::binary_search(basis.begin(), basis.end(), i)) permutation.push_back(i);
  }

  RationalMatrix matrix = rows_of(a.forms(), basis, ell);
  auto inv = inverse(matrix);
  if (!inv) throw NonEssential(rank(matrix), ell);

  std::vector<LinearForm> forms;
  forms.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    if (p < ell) {
      std::vector<Rational> unit(ell);
      unit[p] = 1;
      forms.emplace_back(std::move(unit));
      continue;
    }
    // beta(X) = alpha(inv * X): row vector alpha^T * inv.
    const LinearForm& alpha = a.form(permutation[p]);
    std::vector<Rational> coeffs(ell);
    for (std::size_t c = 0; c < ell; ++c) {
      for (std::size_t k = 0; k < ell; ++k) coeffs[c] += alpha[k] * (*inv)(k, c);
    }
    forms.emplace_back(std::move(coeffs));
  }
  return CanonicalForm{Arrangement(ell, std::move(forms)),
                       ChangeOfBasis{std::move(matrix), std::move(*inv), std::move(permutation)}};
}

std::vector<Flat> intersection_lattice(const Arrangement& a) {
  const std::size_t n = a.size();
  auto closure = [&](std::vector<std::size_t> generators) {
    std::sort(generators.begin(), generators.end());
    const std::size_t r = subset_rank(a.forms(), generators);
    std::vector<std::size_t> closed;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::binary_search(generators.begin(), generators.end(), j)) {
        closed.push_back(j);
        continue;
      }
      auto extended = generators;
      extended.push_back(j);
      if (subset_rank(a.forms(), extended) == r) closed.push_back(j);
    }
    return Flat{std::move(closed), r};
  };

  std::vector<Flat> result;
  std::set<std::vector<std::size_t>> layer_keys;
  std::vector<Flat> layer;
  for (std::size_t i = 0; i < n; ++i) {
    Flat f = closure({i});
    if (layer_keys.insert(f.hyperplanes).second) layer.push_back(std::move(f));
  }
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), [](const Flat& x, const Flat& y) { return x.hyperplanes < y.hyperplanes; });
    result.insert(result.end(), layer.begin(), layer.end());
    std::vector<Flat> next;
    std::set<std::vector<std::size_t>> next_keys;
    for (const Flat& f : layer) {
      if (f.rank == a.ell()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (std::binary_search(f.hyperplanes.begin(), f.hyperplanes.end(), j)) continue;
        auto generators = f.hyperplanes;
        generators.push_back(j);
        Flat g = closure(std::move(generators));
        if (next_keys.insert(g.hyperplanes).second) next.push_back(std::move(g));
      }
    }
    layer = std::move(next);
  }
  return result;
}

std::vector<Circuit> circuits(std::span<const LinearForm> forms) {
  std::vector<Circuit> out;
  if (forms.empty()) return out;
  const std::size_t ell = forms[0].nvars();
  for_each_subset(forms.size(), ell + 1, [&](std::span<const std::size_t> subset) {
    if (subset.size() < 2) return;
    // Columns are the normal vectors; a circuit has a one-dimensional kernel
    // with full support.
    RationalMatrix columns(ell, subset.size());
    for (std::size_t c = 0; c < subset.size(); ++c) {
      for (std::size_t r = 0; r < ell; ++r) columns(r, c) = forms[subset[c]][r];
    }
    auto kernel = kernel_basis(columns);
    if (kernel.size() != 1) return;
    auto& v = kernel[0];
    if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) return;
    const Rational lead = v[0];
    for (auto& x : v) x /= lead;
    out.push_back(Circuit{std::vector<std::size_t>(subset.begin(), subset.end()), std::move(v)});
  });
  return out;
}

std::vector<Circuit> circuits(const Arrangement& a) { return circuits(a.forms()); }

bool verify_lattice_bijection(std::span<const LinearForm> a, std::span<const LinearForm> b,
                              std::span<const std::size_t> perm) {
  if (a.size() != b.size() || perm.size() != a.size()) {
    throw InputError("arrangements and bijection must have the same number of hyperplanes");
  }
  if (a.empty()) return true;
  const std::size_t ell = a[0].nvars();
  if (b[0].nvars() != ell) throw InputError("arrangements live in different dimensions");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw InputError("hyperplane map is not a bijection");
    seen[p] = true;
  }
  bool ok = true;
  std::vector<std::size_t> image;
  for_each_subset(a.size(), ell, [&](std::span<const std::size_t> subset) {
    if (!ok) return;
    image.assign(subset.size(), 0);
    for (std::size_t i = 0; i < subset.size(); ++i) image[i] = perm[subset[i]];
    if (subset_rank(a, subset) != subset_rank(b, image)) ok = false;
  });
  return ok;
}

bool verify_lattice_bijection(const Arrangement& a, const Arrangement& b, std::span<const std::size_t> perm) {
  return verify_lattice_bijection(a.forms(), b.forms(), perm);
}

}  // namespace logder
