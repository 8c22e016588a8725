"""Exact computations around restricted sumsets over Z/pZ.

Bitmask set algebra and closed-form bounds, exact arithmetic in Q(zeta_p),
Fourier transforms and supports, witness functions with prescribed supports,
a step-by-step run of the Fourier-analytic lower bound on concrete sets, and
exhaustive / sampled searches for extremal configurations.
"""

from .cyclotomic import CycNum, root_power
from .errors import CheckFailure, ModulusError, PreconditionError
from .explorer import (SearchReport, SearchSpec, bound_census, canonicalize, conjecture_scan,
                       exhaustive_min, sampled_min)
from .fourier import ZpFunction, convolve, dft, idft, support, uncertainty_check
from .proof import build_F, hat_sets, hatF_expansion, trace_theorem2, theorem2_statement_check
from .residue import (BoundReport, PrimeModulus, Residue, ResidueSet, affine_image, bound_table,
                      restricted_sumset, strict_sumset, sumset)
from .witness import construct_witness, solve_support_system, verify_witness

__version__ = "0.1.0"
