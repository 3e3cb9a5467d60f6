#pragma once

// Exact linear algebra over the integers: matrices with arbitrary-precision
// entries, Smith normal form, finitely generated abelian groups in
// invariant-factor form, homomorphisms between them, and subquotients of
// coordinate lattices. Every group computation in the toolkit reduces to the
// Subquotient engine defined here.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace ogkit::zlin {

using Integer = boost::multiprecision::cpp_int;
using Vector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  IntMatrix operator*(const IntMatrix& rhs) const;
  Vector operator*(const Vector& v) const;
  IntMatrix transpose() const;

  // Columns of `rhs` appended on the right.
  IntMatrix hconcat(const IntMatrix& rhs) const;
  // Rows of `rhs` appended below.
  IntMatrix vconcat(const IntMatrix& rhs) const;
  // Submatrix keeping the listed column indices, in order.
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;

  bool is_zero() const;
  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// D = U * M * V with U, V unimodular; D diagonal with d1 | d2 | ... and
// nonnegative entries. Uinv and Vinv are tracked alongside.
struct SmithForm {
  IntMatrix U, D, V;
  IntMatrix Uinv, Vinv;
  std::size_t rank = 0;

  Integer diag(std::size_t i) const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Reduces a representative modulo m (m > 0 gives the value in [0, m)).
Integer reduce(const Integer& value, const Integer& modulus);

// Finitely generated abelian group: torsion invariant factors in divisibility
// order followed by zeros for free summands. Factors equal to 1 never appear.
class AbGroup {
 public:
  AbGroup() = default;
  explicit AbGroup(std::vector<Integer> invariant_factors);

  static AbGroup zero() { return AbGroup(); }
  static AbGroup free(std::size_t rank);
  static AbGroup cyclic(long long order);  // order 0 gives Z

  const std::vector<Integer>& factors() const { return factors_; }
  std::size_t generators() const { return factors_.size(); }
  bool is_trivial() const { return factors_.empty(); }
  bool is_finite() const;
  // Number of elements; nullopt for infinite groups.
  std::optional<Integer> order() const;
  std::size_t free_rank() const;

  Vector reduce(const Vector& v) const;
  Vector zero_element() const { return Vector(factors_.size(), 0); }
  Vector add(const Vector& a, const Vector& b) const;
  Vector negate(const Vector& a) const;
  bool is_zero(const Vector& a) const;
  bool equal(const Vector& a, const Vector& b) const;

  // All elements in mixed-radix order (first coordinate varies fastest).
  // Throws UnsupportedError for infinite groups.
  std::vector<Vector> elements() const;

  // "0", "Z/2", "Z/2 + Z", ...
  std::string to_string() const;

  bool operator==(const AbGroup& other) const = default;

 private:
  std::vector<Integer> factors_;
};

AbGroup direct_sum(const std::vector<AbGroup>& groups);

// Homomorphism between canonical groups. Column j is the image of dom
// generator j in cod coordinates.
struct AbHom {
  AbGroup dom;
  AbGroup cod;
  IntMatrix matrix;

  static AbHom zero(const AbGroup& dom, const AbGroup& cod);
  static AbHom identity(const AbGroup& g);

  Vector apply(const Vector& x) const;
  // this first, then `next`.
  AbHom then(const AbHom& next) const;
  bool is_well_defined() const;
  bool equals(const AbHom& other) const;
  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }
};

// Quotient Z^n / column-span(relations) brought to canonical form.
struct CanonicalQuotient {
  AbGroup group;
  IntMatrix to_canonical;    // group.generators() x n
  IntMatrix from_canonical;  // n x group.generators()

  Vector class_of(const Vector& x) const;
  Vector representative(const Vector& canonical) const;
};

CanonicalQuotient canonicalize(const IntMatrix& relations);

// Canonical AbGroup of Z^rows / column-span(m).
AbGroup cokernel(const IntMatrix& m);

// Subquotient of the coordinate space Z^n:
//   numerator   = { x : conditions * x == 0 row-wise modulo condition_moduli }
//   denominator = span of (coordinate_moduli[i] * e_i) and the columns of
//                 extra_relations
// The denominator must lie inside the numerator.
class Subquotient {
 public:
  Subquotient(std::size_t ambient_dim, const IntMatrix& conditions,
              const Vector& condition_moduli, const Vector& coordinate_moduli,
              const IntMatrix& extra_relations);

  // Subquotient of the product of cyclic coordinates with no conditions.
  static Subquotient product(const Vector& coordinate_moduli);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const AbGroup& group() const { return quotient_.group; }
  // Columns span the numerator lattice (full column rank).
  const IntMatrix& numerator_basis() const { return basis_; }

  bool contains(const Vector& x) const;
  // Canonical coordinates of the class of x. Throws PreconditionError if x
  // is outside the numerator.
  Vector class_of(const Vector& x) const;
  // A representative in the ambient space, reduced by the coordinate moduli.
  Vector representative(const Vector& canonical) const;
  bool is_trivial_class(const Vector& x) const;
  // Every element, for finite groups.
  std::vector<Vector> elements() const;

 private:
  std::optional<Vector> basis_coordinates(const Vector& x) const;

  std::size_t ambient_dim_;
  Vector coordinate_moduli_;
  IntMatrix basis_;
  SmithForm basis_snf_;
  CanonicalQuotient quotient_;
};

// Kernel of h as an abstract group together with its embedding into dom(h).
struct KernelResult {
  AbGroup group;
  AbHom embedding;
};
KernelResult kernel_subgroup(const AbHom& h);

// Image of h as a subgroup of cod(h), abstractly plus embedding.
KernelResult image_subgroup(const AbHom& h);

// Linear condition on the entries of a homomorphism matrix X (cod x dom,
// entries indexed row-major). Requires sum_k coefficients[k] * X_k to vanish
// modulo `modulus` (0 meaning over Z).
// ker(g) / im(f) for composable f, g with g after f equal to zero. Throws
// PreconditionError when the composite is nonzero.
AbGroup homology(const AbHom& f, const AbHom& g);

struct HomConstraint {
  Vector coefficients;
  Integer modulus;
};

struct HomGroup {
  AbGroup dom, cod;
  Subquotient space;  // ambient = row-major matrix entries

  const AbGroup& group() const { return space.group(); }
  AbHom hom_of(const Vector& canonical) const;
  Vector class_of(const AbHom& h) const;
  // Representatives of each element (finite) or of each generator (infinite).
  std::vector<AbHom> enumerate() const;
  std::vector<AbHom> generators() const;
};

HomGroup hom_group(const AbGroup& a, const AbGroup& b,
                   const std::vector<HomConstraint>& constraints = {});

struct LinearSolution {
  Vector particular;
  std::vector<Vector> kernel_basis;
};

// Solves m * x == b row-wise modulo `moduli` (0 meaning over Z).
std::optional<LinearSolution> solve_linear(const IntMatrix& m, const Vector& b,
                                           const Vector& moduli);

// Lattice basis (columns, full column rank) of the span of the given columns.
IntMatrix lattice_basis(const IntMatrix& generators);

// Integer kernel basis of m (columns).
IntMatrix integer_kernel(const IntMatrix& m);

}  // namespace ogkit::zlin
