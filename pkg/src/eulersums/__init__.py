"""Restricted sum formulas for alternating Euler sums at even arguments.

Exact closed forms are :class:`PiPoly` values (rational polynomials in
pi^2); :mod:`eulersums.oracle` evaluates the defining series numerically.
"""

from .closed_forms import (
    DomainError,
    UnsupportedFormulaError,
    a0,
    a1,
    a_alpha_small_depth,
    a_d,
    a_total,
    xi_row_sum,
    xi_thm11,
    xi_thm13,
    zeta_bar2_power,
)
from .exact import PiPoly, bernoulli, euler_number, zeta_bar_even, zeta_even
from .genfun import phi_series, psi1_series, psi_tot_series
from .words import EulerWord, parse_word, stuffle

__version__ = "0.1.0"
