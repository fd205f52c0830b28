#pragma once

// Verification suites shared by the CLI `verify` command and the acceptance
// runner. Each returns a Report; a sample count of 0 means exhaustive.

#include "flagschur/core.hpp"
#include "flagschur/report.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace flagschur {

/// e[1,0;1,0] e[1,1;0,0] = e[0,1;1,0] + e[1,0;0,1], also via basis_B_expand.
Report check_example_product();

/// Closed generator formulas against interpolated structure constants for
/// every generator and every A in S_q(n,r).
Report check_closed_forms(int n, int r);

/// g_{A,A',A''} = h^L_{MN} on all upper-triangular compatible triples; the
/// nested count agrees with the block tables there, and it gives the same
/// value after adding each diagonal shift to all three matrices.
Report check_hall_numbers(int n, int r, const std::vector<Composition>& shifts = {});

/// Filtration chain product = e_A * prod [m_ij]! for each given A.
Report check_chain_products(const std::vector<OrbitMatrix>& uppers);

/// basis_B_expand(A) = e_A + higher terms in the join order, and each
/// (d,e) block of the transition matrix has determinant 1 at q = 0, 1, 2.
Report check_basis_B(int n, int r);

Report check_star_associativity(int n, int r, std::size_t samples = 0, std::uint64_t seed = 1);
Report check_open_orbit(int n, int r, std::size_t samples = 0, std::uint64_t seed = 1);
/// psi(A * B) = psi(A) psi(B) at q = 0, and the psi transition per block has
/// determinant +-1.
Report check_psi(int n, int r, std::size_t samples = 0, std::uint64_t seed = 1);

/// Open orbits compose, o_d and k_d - o_d are orthogonal idempotents,
/// omega is multiplicative, and e_B' * o * e_B = o.
Report check_matrix_block(int n, int r);

/// t_sigma, the Hecke relations, the Demazure oracle and the 2^(n-1)
/// nested idempotents.
Report check_hecke(int n);

}  // namespace flagschur
