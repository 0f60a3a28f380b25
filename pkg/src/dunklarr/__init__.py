"""Dunkl metrics of weighted complex hyperplane arrangements.

Decides whether a weighted central arrangement admits a Dunkl metric, using
the stability test, the Hirzebruch quadratic form, a balanced-metric solver
and the codimension-2 commutator condition, and searches for Dunkl weights by
linear programming.
"""

__version__ = "0.1.0"

from .arrangement import (
    Arrangement,
    Flat,
    IntersectionPoset,
    classify_flat,
    closure,
    enumerate_flats,
    global_properties,
    rank,
    validate_arrangement,
)
from .balance import BalanceResult, balance
from .catalog import braid, catalog, dihedral_lines, full_monomial_B, generic
from .dunkl import condition_f_check, dunkl_decision, residues
from .frames import frame_operator, hpd_inv_sqrt, welch_gap
from .hirzebruch import langer_statistic, local_weight, q_evaluate
from .stability import stability_cone, stability_report
from .weightfinder import critq_system, find_dunkl_weights, sample_feasible
