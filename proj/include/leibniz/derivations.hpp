#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/matrix.hpp"

#include <cstddef>
#include <vector>

namespace leibniz {

/// A linear map d on an n-dimensional algebra, stored as the n x n matrix
/// whose column l holds the coordinates of d(e_{l+1}) (0-based l).
using DerivationMatrix = Matrix;

struct DerivationBasis {
    std::size_t n = 0;
    std::vector<DerivationMatrix> matrices;
    std::size_t dimension() const { return matrices.size(); }
};

/// The homogeneous linear system expressing d([e_i,e_j]) = [d(e_i),e_j] +
/// [e_i,d(e_j)] on all basis pairs, as an n^3 x n^2 matrix over the
/// rationals. Unknown ordering: flat index (l-1)*n + k holds d_k^l, i.e.
/// the matrix D is flattened column by column. Equation rows are ordered
/// lexicographically by (i, j, k); rows of triples no structure constant
/// touches are kept as zero rows.
Matrix derivation_constraint_matrix(const Algebra& a);

/// Solves the constraint system exactly; every returned matrix satisfies
/// is_derivation, and the count equals n^2 minus the rank of the system.
DerivationBasis der_basis(const Algebra& a);

/// dim Der(L), computed from the rank alone without materializing basis
/// matrices.
std::size_t der_dim(const Algebra& a);

/// Direct check of the derivation identity on all basis pairs; throws
/// std::invalid_argument when the matrix size does not match the algebra.
bool is_derivation(const Algebra& a, const DerivationMatrix& d);

/// Matrix of the right multiplication x -> [x, z]. For a Leibniz algebra
/// this is always a derivation.
DerivationMatrix right_mul(const Algebra& a, const Element& z);

/// Closed-form basis of Der(NGF_1) in dimension n >= 3, length n+1:
///   v_1     = E_11 + sum_{i=2}^n (i-1) E_ii
///   v_k     = E_k1 + sum_{i=k}^n E_{i,i-k+2},  2 <= k <= n-1
///   v_n     = E_n1
///   v_{n+1} = E_n2
/// (E_ij in 1-based matrix-unit notation.) Spans exactly
/// der_basis(ngf1(n)).
std::vector<DerivationMatrix> ngf1_analytic_der_basis(std::size_t n);

/// Column-major flattening matching the constraint system's unknown order.
Vec flatten_column_major(const Matrix& d);
DerivationMatrix unflatten_column_major(std::size_t n, const Vec& v);

}  // namespace leibniz
