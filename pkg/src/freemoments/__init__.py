"""Exact moments and cumulants of x + y = a + b + c + d + inverses over the
amalgamating subalgebra generated by h = aba^-1b^-1 = cdc^-1d^-1."""
from .algebra import (
    BudgetError,
    GroupAlgebraElement,
    cond_expect,
    f_pq,
    gadd,
    gmul,
    gscale,
    phi_trace,
    sandwich_expect,
    sphere_sum,
    tau_trace,
)
from .amalgam import (
    AmalgamAlgebraElement,
    NormalForm,
    amalgam_expect,
    amul,
    coset_rep,
    generating_element,
    normalize,
    oracle_moments,
)
from .laurent import HLaurent
from .partitions import NCPartition, enumerate_nc, even_strata, leq, mobius, nesting_forest
from .pipeline import (
    BlockExpr,
    Deep,
    cumulant_xy,
    moment_xy,
    numbering_map,
    partition_moment,
    phi_eval,
    psi,
    scalar_moment,
    trivial_cumulant,
)
from .radial import expect_power, radial_power, tau_free
from .verify import verify_cross
from .words import Letter, h_power_of, multiply, reduce, sphere_words

__version__ = "0.1.0"
