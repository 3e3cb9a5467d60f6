#include "ogkit/zlin.hpp"

#include "ogkit/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ogkit::zlin {

namespace mp = boost::multiprecision;

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw PreconditionError("from_rows: ragged matrix");
    std::size_t j = 0;
    for (long long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("from_rows: ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw PreconditionError("from_columns: ragged matrix");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector IntMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Vector IntMatrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void IntMatrix::set_column(std::size_t c, const Vector& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw PreconditionError("matrix product: dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Integer& b = rhs(k, j);
        if (b != 0) out(i, j) += a * b;
      }
    }
  return out;
}

Vector IntMatrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw PreconditionError("matrix-vector product: dimension mismatch");
  Vector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if ((*this)(i, k) != 0 && v[k] != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_) throw PreconditionError("hconcat: row mismatch");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& rhs) const {
  if (cols_ != rhs.cols_) throw PreconditionError("vconcat: column mismatch");
  IntMatrix out(rows_ + rhs.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(rhs.data_.begin(), rhs.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  IntMatrix out(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
  return out;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  IntMatrix out(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

class SnfWorker {
 public:
  explicit SnfWorker(const IntMatrix& m)
      : D(m),
        U(IntMatrix::identity(m.rows())),
        Uinv(IntMatrix::identity(m.rows())),
        V(IntMatrix::identity(m.cols())),
        Vinv(IntMatrix::identity(m.cols())) {}

  IntMatrix D, U, Uinv, V, Vinv;

  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const Integer& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < D.cols(); ++k)
      if (D(j, k) != 0) D(i, k) += c * D(j, k);
    for (std::size_t k = 0; k < U.cols(); ++k)
      if (U(j, k) != 0) U(i, k) += c * U(j, k);
    // Uinv <- Uinv * E^{-1}: col_j -= c * col_i
    for (std::size_t k = 0; k < Uinv.rows(); ++k)
      if (Uinv(k, i) != 0) Uinv(k, j) -= c * Uinv(k, i);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < D.cols(); ++k) std::swap(D(i, k), D(j, k));
    for (std::size_t k = 0; k < U.cols(); ++k) std::swap(U(i, k), U(j, k));
    for (std::size_t k = 0; k < Uinv.rows(); ++k) std::swap(Uinv(k, i), Uinv(k, j));
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < D.cols(); ++k) D(i, k) = -D(i, k);
    for (std::size_t k = 0; k < U.cols(); ++k) U(i, k) = -U(i, k);
    for (std::size_t k = 0; k < Uinv.rows(); ++k) Uinv(k, i) = -Uinv(k, i);
  }
  // col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, const Integer& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < D.rows(); ++k)
      if (D(k, j) != 0) D(k, i) += c * D(k, j);
    for (std::size_t k = 0; k < V.rows(); ++k)
      if (V(k, j) != 0) V(k, i) += c * V(k, j);
    // Vinv <- E^{-1} * Vinv: row_j -= c * row_i
    for (std::size_t k = 0; k < Vinv.cols(); ++k)
      if (Vinv(i, k) != 0) Vinv(j, k) -= c * Vinv(i, k);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < D.rows(); ++k) std::swap(D(k, i), D(k, j));
    for (std::size_t k = 0; k < V.rows(); ++k) std::swap(V(k, i), V(k, j));
    for (std::size_t k = 0; k < Vinv.cols(); ++k) std::swap(Vinv(i, k), Vinv(j, k));
  }

  std::size_t run() {
    const std::size_t m = D.rows(), n = D.cols();
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      if (!bring_min_to(t)) break;
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (D(i, t) == 0) continue;
          Integer q = D(i, t) / D(t, t);
          add_row(i, t, -q);
          if (D(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (D(t, j) == 0) continue;
          Integer q = D(t, j) / D(t, t);
          add_col(j, t, -q);
          if (D(t, j) != 0) dirty = true;
        }
        if (dirty) {
          bring_min_to(t);
          continue;
        }
        // Divisibility: the pivot must divide every remaining entry.
        bool fixed = true;
        for (std::size_t i = t + 1; i < m && fixed; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (D(i, j) % D(t, t) != 0) {
              add_row(t, i, 1);
              fixed = false;
              break;
            }
        if (fixed) break;
      }
      if (D(t, t) < 0) negate_row(t);
    }
    return t;
  }

 private:
  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool bring_min_to(std::size_t t) {
    const std::size_t m = D.rows(), n = D.cols();
    bool found = false;
    std::size_t bi = t, bj = t;
    Integer best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (D(i, j) == 0) continue;
        Integer a = mp::abs(D(i, j));
        if (!found || a < best) {
          best = a;
          bi = i;
          bj = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }
};

}  // namespace

Integer SmithForm::diag(std::size_t i) const {
  if (i < D.rows() && i < D.cols()) return D(i, i);
  return 0;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SnfWorker w(m);
  std::size_t rank = w.run();
  SmithForm out{std::move(w.U), std::move(w.D), std::move(w.V), std::move(w.Uinv),
                std::move(w.Vinv), rank};
  return out;
}

Integer reduce(const Integer& value, const Integer& modulus) {
  if (modulus == 0) return value;
  Integer r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

// ---------------------------------------------------------------------------
// AbGroup

AbGroup::AbGroup(std::vector<Integer> invariant_factors) : factors_(std::move(invariant_factors)) {
  bool seen_free = false;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Integer& d = factors_[i];
    if (d < 0 || d == 1) throw PreconditionError("AbGroup: invariant factors must be 0 or >= 2");
    if (d == 0) {
      seen_free = true;
      continue;
    }
    if (seen_free) throw PreconditionError("AbGroup: torsion factors must precede free factors");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw PreconditionError("AbGroup: invariant factors must be in divisibility order");
  }
}

AbGroup AbGroup::free(std::size_t rank) { return AbGroup(std::vector<Integer>(rank, 0)); }

AbGroup AbGroup::cyclic(long long order) {
  if (order == 1) return AbGroup();
  return AbGroup({Integer(order)});
}

bool AbGroup::is_finite() const {
  return std::none_of(factors_.begin(), factors_.end(), [](const Integer& d) { return d == 0; });
}

std::optional<Integer> AbGroup::order() const {
  if (!is_finite()) return std::nullopt;
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

std::size_t AbGroup::free_rank() const {
  return static_cast<std::size_t>(
      std::count_if(factors_.begin(), factors_.end(), [](const Integer& d) { return d == 0; }));
}

Vector AbGroup::reduce(const Vector& v) const {
  if (v.size() != factors_.size()) throw PreconditionError("AbGroup::reduce: wrong length");
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = zlin::reduce(v[i], factors_[i]);
  return out;
}

Vector AbGroup::add(const Vector& a, const Vector& b) const {
  Vector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return reduce(s);
}

Vector AbGroup::negate(const Vector& a) const {
  Vector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = -a[i];
  return reduce(s);
}

bool AbGroup::is_zero(const Vector& a) const {
  Vector r = reduce(a);
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

bool AbGroup::equal(const Vector& a, const Vector& b) const { return reduce(a) == reduce(b); }

std::vector<Vector> AbGroup::elements() const {
  if (!is_finite()) throw UnsupportedError("cannot enumerate an infinite group " + to_string());
  std::vector<Vector> out;
  Vector cur(factors_.size(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    for (; i < cur.size(); ++i) {
      cur[i] += 1;
      if (cur[i] < factors_[i]) break;
      cur[i] = 0;
    }
    if (i == cur.size()) break;
  }
  return out;
}

std::string AbGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << " + ";
    if (factors_[i] == 0)
      os << "Z";
    else
      os << "Z/" << factors_[i];
  }
  return os.str();
}

AbGroup direct_sum(const std::vector<AbGroup>& groups) {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.generators();
  IntMatrix rel(n, n);
  std::size_t k = 0;
  for (const auto& g : groups)
    for (const auto& d : g.factors()) {
      rel(k, k) = d;
      ++k;
    }
  return cokernel(rel);
}

// ---------------------------------------------------------------------------
// AbHom

AbHom AbHom::zero(const AbGroup& dom, const AbGroup& cod) {
  return AbHom{dom, cod, IntMatrix(cod.generators(), dom.generators())};
}

AbHom AbHom::identity(const AbGroup& g) {
  return AbHom{g, g, IntMatrix::identity(g.generators())};
}

Vector AbHom::apply(const Vector& x) const { return cod.reduce(matrix * x); }

AbHom AbHom::then(const AbHom& next) const {
  if (!(cod == next.dom)) throw PreconditionError("AbHom::then: groups do not match");
  IntMatrix m = next.matrix * matrix;
  for (std::size_t j = 0; j < m.cols(); ++j) m.set_column(j, next.cod.reduce(m.column(j)));
  return AbHom{dom, next.cod, std::move(m)};
}

bool AbHom::is_well_defined() const {
  if (matrix.rows() != cod.generators() || matrix.cols() != dom.generators()) return false;
  for (std::size_t j = 0; j < dom.generators(); ++j) {
    const Integer& d = dom.factors()[j];
    if (d == 0) continue;
    Vector col = matrix.column(j);
    for (auto& x : col) x *= d;
    if (!cod.is_zero(col)) return false;
  }
  return true;
}

bool AbHom::equals(const AbHom& other) const {
  if (!(dom == other.dom) || !(cod == other.cod)) return false;
  for (std::size_t j = 0; j < dom.generators(); ++j)
    if (!cod.equal(matrix.column(j), other.matrix.column(j))) return false;
  return true;
}

bool AbHom::is_zero() const {
  for (std::size_t j = 0; j < dom.generators(); ++j)
    if (!cod.is_zero(matrix.column(j))) return false;
  return true;
}

bool AbHom::is_injective() const { return kernel_subgroup(*this).group.is_trivial(); }

bool AbHom::is_surjective() const {
  // cod / image is trivial
  IntMatrix rel = matrix;
  IntMatrix orders(cod.generators(), cod.generators());
  for (std::size_t i = 0; i < cod.generators(); ++i) orders(i, i) = cod.factors()[i];
  return cokernel(rel.hconcat(orders)).is_trivial();
}

// ---------------------------------------------------------------------------
// Canonical quotients and subquotients

Vector CanonicalQuotient::class_of(const Vector& x) const {
  return group.reduce(to_canonical * x);
}

Vector CanonicalQuotient::representative(const Vector& canonical) const {
  return from_canonical * canonical;
}

CanonicalQuotient canonicalize(const IntMatrix& relations) {
  const std::size_t n = relations.rows();
  SmithForm snf = smith_normal_form(relations);
  std::vector<Integer> factors;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    Integer d = snf.diag(i);
    if (d == 1) continue;
    keep.push_back(i);
    factors.push_back(d);
  }
  CanonicalQuotient q;
  q.group = AbGroup(factors);
  q.to_canonical = snf.U.select_rows(keep);
  q.from_canonical = snf.Uinv.select_columns(keep);
  return q;
}

AbGroup cokernel(const IntMatrix& m) { return canonicalize(m).group; }

IntMatrix integer_kernel(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  std::vector<std::size_t> idx;
  for (std::size_t j = snf.rank; j < m.cols(); ++j) idx.push_back(j);
  return snf.V.select_columns(idx);
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  SmithForm snf = smith_normal_form(generators);
  // generators * V = Uinv * D, so the span is generated by d_i * Uinv[:, i].
  IntMatrix basis(generators.rows(), snf.rank);
  for (std::size_t i = 0; i < snf.rank; ++i) {
    Integer d = snf.diag(i);
    for (std::size_t r = 0; r < generators.rows(); ++r) basis(r, i) = snf.Uinv(r, i) * d;
  }
  return basis;
}

Subquotient::Subquotient(std::size_t ambient_dim, const IntMatrix& conditions,
                         const Vector& condition_moduli, const Vector& coordinate_moduli,
                         const IntMatrix& extra_relations)
    : ambient_dim_(ambient_dim), coordinate_moduli_(coordinate_moduli) {
  if (coordinate_moduli_.size() != ambient_dim)
    throw PreconditionError("Subquotient: coordinate moduli length mismatch");
  if (conditions.rows() > 0 && conditions.cols() != ambient_dim)
    throw PreconditionError("Subquotient: condition matrix width mismatch");
  if (condition_moduli.size() != conditions.rows())
    throw PreconditionError("Subquotient: condition moduli length mismatch");
  if (extra_relations.cols() > 0 && extra_relations.rows() != ambient_dim)
    throw PreconditionError("Subquotient: relation height mismatch");

  // Numerator lattice.
  if (conditions.rows() == 0) {
    basis_ = IntMatrix::identity(ambient_dim);
  } else {
    std::vector<std::size_t> modular;
    for (std::size_t r = 0; r < conditions.rows(); ++r)
      if (condition_moduli[r] != 0) modular.push_back(r);
    IntMatrix slack(conditions.rows(), modular.size());
    for (std::size_t k = 0; k < modular.size(); ++k)
      slack(modular[k], k) = condition_moduli[modular[k]];
    IntMatrix ker = integer_kernel(conditions.hconcat(slack));
    std::vector<std::size_t> head(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) head[i] = i;
    IntMatrix projected = ker.select_rows(head);
    basis_ = lattice_basis(projected);
  }
  basis_snf_ = smith_normal_form(basis_);

  // Denominator expressed in numerator coordinates.
  std::vector<Vector> den;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    if (coordinate_moduli_[i] == 0) continue;
    Vector e(ambient_dim, 0);
    e[i] = coordinate_moduli_[i];
    den.push_back(std::move(e));
  }
  for (std::size_t j = 0; j < extra_relations.cols(); ++j) den.push_back(extra_relations.column(j));
  const std::size_t z = basis_.cols();
  IntMatrix coords(z, den.size());
  for (std::size_t j = 0; j < den.size(); ++j) {
    auto c = basis_coordinates(den[j]);
    if (!c) throw InternalError("Subquotient: denominator is not contained in numerator");
    coords.set_column(j, *c);
  }
  quotient_ = canonicalize(coords);
}

Subquotient Subquotient::product(const Vector& coordinate_moduli) {
  return Subquotient(coordinate_moduli.size(), IntMatrix(0, coordinate_moduli.size()), {},
                     coordinate_moduli, IntMatrix(coordinate_moduli.size(), 0));
}

std::optional<Vector> Subquotient::basis_coordinates(const Vector& x) const {
  if (x.size() != ambient_dim_) throw PreconditionError("Subquotient: vector length mismatch");
  const std::size_t z = basis_.cols();
  // basis = Uinv * D * Vinv, so basis * c = x  <=>  D * (Vinv c) = U x.
  Vector ux = basis_snf_.U * x;
  Vector w(z, 0);
  for (std::size_t i = 0; i < ux.size(); ++i) {
    if (i < z) {
      Integer d = basis_snf_.diag(i);
      if (d == 0) {
        if (ux[i] != 0) return std::nullopt;
        continue;
      }
      if (ux[i] % d != 0) return std::nullopt;
      w[i] = ux[i] / d;
    } else if (ux[i] != 0) {
      return std::nullopt;
    }
  }
  return basis_snf_.V * w;
}

bool Subquotient::contains(const Vector& x) const { return basis_coordinates(x).has_value(); }

Vector Subquotient::class_of(const Vector& x) const {
  auto c = basis_coordinates(x);
  if (!c) throw PreconditionError("Subquotient::class_of: vector is outside the subgroup");
  return quotient_.class_of(*c);
}

Vector Subquotient::representative(const Vector& canonical) const {
  Vector v = basis_ * quotient_.representative(canonical);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = zlin::reduce(v[i], coordinate_moduli_[i]);
  return v;
}

bool Subquotient::is_trivial_class(const Vector& x) const { return group().is_zero(class_of(x)); }

std::vector<Vector> Subquotient::elements() const { return group().elements(); }

// ---------------------------------------------------------------------------
// Kernels, images, Hom groups

KernelResult kernel_subgroup(const AbHom& h) {
  const std::size_t n = h.dom.generators();
  Vector cond_mod(h.cod.factors().begin(), h.cod.factors().end());
  Vector coord_mod(h.dom.factors().begin(), h.dom.factors().end());
  Subquotient sq(n, h.matrix, cond_mod, coord_mod, IntMatrix(n, 0));
  const AbGroup& k = sq.group();
  IntMatrix emb(n, k.generators());
  for (std::size_t i = 0; i < k.generators(); ++i) {
    Vector e(k.generators(), 0);
    e[i] = 1;
    emb.set_column(i, h.dom.reduce(sq.representative(e)));
  }
  return KernelResult{k, AbHom{k, h.dom, std::move(emb)}};
}

KernelResult image_subgroup(const AbHom& h) {
  const std::size_t n = h.cod.generators();
  Vector coord_mod(h.cod.factors().begin(), h.cod.factors().end());
  // image + relations, modulo relations: numerator = image lattice.
  IntMatrix gens = h.matrix;
  IntMatrix orders(n, n);
  for (std::size_t i = 0; i < n; ++i) orders(i, i) = coord_mod[i];
  // Work in coordinates of the lattice spanned by image and relations.
  IntMatrix span = lattice_basis(gens.hconcat(orders));
  const std::size_t z = span.cols();
  SmithForm snf = smith_normal_form(span);
  auto coords_of = [&](const Vector& x) {
    Vector ux = snf.U * x;
    Vector w(z, 0);
    for (std::size_t i = 0; i < z; ++i) w[i] = ux[i] / snf.diag(i);
    return snf.V * w;
  };
  std::vector<Vector> den;
  for (std::size_t i = 0; i < n; ++i)
    if (coord_mod[i] != 0) {
      Vector e(n, 0);
      e[i] = coord_mod[i];
      den.push_back(coords_of(e));
    }
  CanonicalQuotient q = canonicalize(IntMatrix::from_columns(den, z));
  IntMatrix emb(n, q.group.generators());
  for (std::size_t i = 0; i < q.group.generators(); ++i) {
    Vector e(q.group.generators(), 0);
    e[i] = 1;
    emb.set_column(i, h.cod.reduce(span * q.representative(e)));
  }
  return KernelResult{q.group, AbHom{q.group, h.cod, std::move(emb)}};
}

AbHom HomGroup::hom_of(const Vector& canonical) const {
  Vector entries = space.representative(canonical);
  IntMatrix m(cod.generators(), dom.generators());
  for (std::size_t i = 0; i < cod.generators(); ++i)
    for (std::size_t j = 0; j < dom.generators(); ++j) m(i, j) = entries[i * dom.generators() + j];
  return AbHom{dom, cod, std::move(m)};
}

Vector HomGroup::class_of(const AbHom& h) const {
  Vector entries(cod.generators() * dom.generators());
  for (std::size_t i = 0; i < cod.generators(); ++i)
    for (std::size_t j = 0; j < dom.generators(); ++j)
      entries[i * dom.generators() + j] = h.matrix(i, j);
  return space.class_of(entries);
}

std::vector<AbHom> HomGroup::enumerate() const {
  if (!group().is_finite()) return generators();
  std::vector<AbHom> out;
  for (const auto& e : group().elements()) out.push_back(hom_of(e));
  return out;
}

std::vector<AbHom> HomGroup::generators() const {
  std::vector<AbHom> out;
  for (std::size_t i = 0; i < group().generators(); ++i) {
    Vector e(group().generators(), 0);
    e[i] = 1;
    out.push_back(hom_of(e));
  }
  return out;
}

HomGroup hom_group(const AbGroup& a, const AbGroup& b, const std::vector<HomConstraint>& constraints) {
  const std::size_t na = a.generators(), nb = b.generators();
  const std::size_t n = na * nb;
  std::vector<Vector> rows;
  Vector moduli;
  // d_j * X[:, j] must vanish in b.
  for (std::size_t j = 0; j < na; ++j) {
    const Integer& d = a.factors()[j];
    if (d == 0) continue;
    for (std::size_t i = 0; i < nb; ++i) {
      Vector row(n, 0);
      row[i * na + j] = d;
      rows.push_back(std::move(row));
      moduli.push_back(b.factors()[i]);
    }
  }
  for (const auto& c : constraints) {
    if (c.coefficients.size() != n) throw PreconditionError("hom_group: constraint length mismatch");
    rows.push_back(c.coefficients);
    moduli.push_back(c.modulus);
  }
  Vector coord_mod(n);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < na; ++j) coord_mod[i * na + j] = b.factors()[i];
  Subquotient sq(n, IntMatrix::from_rows(rows, n), moduli, coord_mod, IntMatrix(n, 0));
  return HomGroup{a, b, std::move(sq)};
}

std::optional<LinearSolution> solve_linear(const IntMatrix& m, const Vector& b, const Vector& moduli) {
  if (b.size() != m.rows() || moduli.size() != m.rows())
    throw PreconditionError("solve_linear: dimension mismatch");
  const std::size_t n = m.cols();
  std::vector<std::size_t> modular;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (moduli[r] != 0) modular.push_back(r);
  IntMatrix slack(m.rows(), modular.size());
  for (std::size_t k = 0; k < modular.size(); ++k) slack(modular[k], k) = moduli[modular[k]];
  IntMatrix a = m.hconcat(slack);
  SmithForm snf = smith_normal_form(a);
  Vector ub = snf.U * b;
  Vector w(a.cols(), 0);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    Integer d = snf.diag(i);
    if (i < snf.rank) {
      if (ub[i] % d != 0) return std::nullopt;
      w[i] = ub[i] / d;
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  Vector full = snf.V * w;
  LinearSolution sol;
  sol.particular.assign(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<std::size_t> ker_idx;
  for (std::size_t j = snf.rank; j < a.cols(); ++j) ker_idx.push_back(j);
  IntMatrix ker = snf.V.select_columns(ker_idx);
  std::vector<std::size_t> head(n);
  for (std::size_t i = 0; i < n; ++i) head[i] = i;
  IntMatrix basis = lattice_basis(ker.select_rows(head));
  for (std::size_t j = 0; j < basis.cols(); ++j) sol.kernel_basis.push_back(basis.column(j));
  return sol;
}

AbGroup homology(const AbHom& f, const AbHom& g) {
  if (!(f.cod == g.dom)) throw PreconditionError("homology: maps are not composable");
  if (!f.then(g).is_zero()) throw PreconditionError("homology: composite is not zero");
  Subquotient s(g.dom.generators(), g.matrix, g.cod.factors(), g.dom.factors(), f.matrix);
  return s.group();
}

}  // namespace ogkit::zlin
