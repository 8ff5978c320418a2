#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "whd/exec.hpp"
#include "whd/states.hpp"
#include "whd/wh_group.hpp"

namespace whd {

struct MagickReport {
    double value = 0;
    double bound_sic = 0; // 1 + (d-1) sqrt(d+1)
    double bound_mub = 0; // 1 + (d-1) sqrt(d)
    /// |Tr W rho| per operator, row-major over (k, l); filled on request.
    std::optional<std::vector<double>> per_operator;
};

double sic_bound(long d);
double mub_bound(long d);

/// Sum of |Tr W rho| over the d^2 product-group operators.
MagickReport magick(const StateVector& s, Exec exec = Exec::Parallel, bool per_op = false);
MagickReport magick(const PhaseState& s, Exec exec = Exec::Parallel, bool per_op = false);
MagickReport magick(const DensityOperator& rho, const DimProfile& profile,
                    Exec exec = Exec::Parallel, bool per_op = false);

/// Same sum over the single Weyl-Heisenberg group of the full dimension.
double magic_global(const StateVector& s, Exec exec = Exec::Parallel);
double magic_global(const DensityOperator& rho, Exec exec = Exec::Parallel);

/// Divergence of d^2 unit vectors from a SIC.
double p_sic(const std::vector<StateVector>& states, Exec exec = Exec::Parallel);

/// Divergence of a basis list from a set of MUBs.
double p_mub(const std::vector<std::vector<StateVector>>& bases, double ortho_tol = 1e-9,
             Exec exec = Exec::Parallel);

/// Orbit closed forms expressing the divergences through magick.
double p_sic_from_magick(long d, double m);
double p_mub_from_magick(long d, double m);

int smallest_nonresidue(int p);

enum class Marginal { Rho1, Rho2 };

/// Closed-form marginals of the dual-parameter fiducial over the x^2 - q
/// representation (q the smallest quadratic non-residue): rho1 has
/// off-diagonals eps_p Jacobi(3q(i-j)) w^(i^3-j^3) / p^(3/2); rho2 mixes
/// |i> with |-i>.
DensityOperator marginal_closed_form(int p, Marginal which);

/// Hilbert-Schmidt overlap of two WH-displaced marginals: 1/p for k != k',
/// (p-1)/p^2 for k = k' and l != l', (2p-1)/p^2 when both match.
double marginal_hs_overlap(int p, int k, int l, int k2, int l2);

/// Magick of the global fiducial next to the product of the local magics;
/// the first strictly exceeds the second whenever n > 1.
std::pair<double, double> product_magic_comparison(int p, int n);

} // namespace whd
