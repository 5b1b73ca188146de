"""Kostka-Foulkes polynomials of type A computed from Kostant partitions.

Four independent routes to K_{lambda,mu}(t):

* ``kf_alternating``: signed sum of the t-analogue of Kostant's partition function,
* ``kf_positive``: fixed points of the involution psi on the phi-graph,
* ``kf_admissible``: admissible Kostant partitions of lambda - mu,
* ``kf_charge``: the charge statistic on semistandard tableaux.
"""
from .charge import Tableau, charge, enumerate_ssyt, kf_charge
from .crystal import Zero, e_hat, e_op, epsilon, epsilon_hat, f_op, string_data, varphi
from .errors import DomainError, Falsification, InvariantViolation, RankError
from .kostant import (
    KostantPartition,
    SignedTerm,
    build_S,
    enumerate_partitions,
    evaluate,
    kf_alternating,
    p_t,
)
from .phi_graph import (
    PhiGraph,
    build_graph,
    fixed_points,
    is_admissible,
    kf_admissible,
    kf_positive,
    psi,
    to_dot,
)
from .poly import Poly
from .roots import Permutation, WeightVector, positive_roots, rho, weyl_act

__version__ = "0.1.0"

__all__ = [
    "DomainError", "Falsification", "InvariantViolation", "KostantPartition", "Permutation",
    "PhiGraph", "Poly", "RankError", "SignedTerm", "Tableau", "WeightVector", "Zero",
    "build_S", "build_graph", "charge", "e_hat", "e_op", "enumerate_partitions",
    "enumerate_ssyt", "epsilon", "epsilon_hat", "evaluate", "f_op", "fixed_points",
    "is_admissible", "kf_admissible", "kf_alternating", "kf_charge", "kf_positive", "p_t",
    "positive_roots", "psi", "rho", "string_data", "to_dot", "varphi", "weyl_act",
]
