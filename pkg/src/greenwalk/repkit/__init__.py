"""Brute-force module-category oracle for type-A path algebras over the rationals."""

from .hn import hn_filtration, induced_torsion_class, stable_and_semistable, verify_induction
from .lattice import (
    TorsionClassSet,
    TorsionLattice,
    cfho_from_chain,
    lattice_to_dot,
    lattice_to_json,
    maximal_chains,
    mgs_from_cfho,
    torsion_lattice,
    verify_cfho,
)
from .tau import tau_tilting_pairs_and_cmatrices
from .typea import ThinModule, TypeAQuiver, indecomposables

__all__ = [
    "hn_filtration",
    "induced_torsion_class",
    "stable_and_semistable",
    "verify_induction",
    "TorsionClassSet",
    "TorsionLattice",
    "cfho_from_chain",
    "lattice_to_dot",
    "lattice_to_json",
    "maximal_chains",
    "mgs_from_cfho",
    "torsion_lattice",
    "verify_cfho",
    "tau_tilting_pairs_and_cmatrices",
    "ThinModule",
    "TypeAQuiver",
    "indecomposables",
]
