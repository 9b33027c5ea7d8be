"""Exact Hilbert-Schmidt geometry of quantum state spaces.

Closed-form volumes, boundary areas, edge volumes, radii and shape ratios
of the sets of complex and real density matrices, exact volumes of the
classical compact groups and their flag/projective quotients in three
metric conventions, and Monte Carlo machinery that verifies the underlying
measures by sampling random density matrices.
"""

from .exactnum import ExactValue, ONE, PI, ZERO, exact_sqrt, from_rational, gamma_exact, parse
from .constants import EnsembleParams, c_norm, laguerre_integral, log_c_norm
from .groups import (
    Convention,
    CosetSpec,
    Family,
    ball_volume,
    sphere_volume,
    vol_coset,
    vol_group,
)
from .mixedstates import (
    GeometrySummary,
    ReferenceBody,
    ReferenceKind,
    StateSpace,
    geometry,
    reference_body,
    vol_edge,
    vol_mixed,
)
from .sampling import (
    bloch_vector,
    density_from_bloch,
    eigvals_hermitian,
    gell_mann_basis,
    is_positive,
    make_rng,
    sample_hs_batch,
    sample_hs_density,
    sample_pure_partial_trace,
)
from .verify import (
    MCEstimate,
    mc_hit_or_miss_fraction,
    mc_norm_constant,
    mc_purity,
    run_suite,
    spectral_fit_test,
)

__version__ = "0.1.0"
