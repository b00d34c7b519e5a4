#pragma once

#include "hsqm/hs_space.hpp"
#include "hsqm/modular.hpp"
#include "hsqm/quadrature.hpp"

namespace hsqm {

/// Thermal coherent state D(z) Phi_beta in B2(H_N).
struct ThermalCS {
  ThermalSpec spec;
  cplx z;
  HSOperator state;
};

/// Largest |z| for which truncated displacements are trusted: sqrt(N)/4.
double safe_radius(FockSpace space);

/// Phi_beta = rho_beta^{1/2}, diagonal with unit HS norm.
HSOperator thermal_vector(FockSpace space, const ThermalSpec& spec);

/// D(z) Phi_beta, the B2 picture of U_1(z) acting on Phi_beta. Throws
/// InvalidParameter for |z| beyond safe_radius.
ThermalCS thermal_cs(FockSpace space, const ThermalSpec& spec, cplx z);

/// Quadrature of (1/2 pi) int |z><z| dx dy over the plane, restricted to
/// operators supported on levels < block; block^2 x block^2, ordered
/// n*block + l. `mirrored` integrates |-z><-z| instead.
Matrix resolution_block(FockSpace space, const ThermalSpec& spec, const QuadratureScheme& q, int block,
                        bool mirrored = false);

/// Levels 0..N/4, the block on which resolution contracts are stated.
int resolution_block_size(FockSpace space);

/// Operator-norm distance between resolution_block and the identity on
/// levels <= N/4.
double resolution_residual(FockSpace space, const ThermalSpec& spec, const QuadratureScheme& q);
/// Same for the mirrored states |-z>.
double mirrored_resolution_residual(FockSpace space, const ThermalSpec& spec, const QuadratureScheme& q);

/// Operator-norm distance between resolution_block and right
/// multiplication by rho_beta on the same block.
double right_density_residual(FockSpace space, const ThermalSpec& spec, const QuadratureScheme& q);

/// max-entry distance between (1/2 pi) int D rho D^dagger dx dy and I on
/// levels <= N/4, i.e. the resolution read on H rather than on B2.
double hilbert_resolution_residual(FockSpace space, const ThermalSpec& spec, const QuadratureScheme& q);

/// ||S_beta |z> - |-z>||_2.
double s_beta_reflection(FockSpace space, const ThermalSpec& spec, cplx z);

}  // namespace hsqm
