"""Exact maximal green sequences, brick sequences and central charges."""

from .charge import CentralCharge, CrossingReport, Phase, eval_charge, phase_cmp, solve_crossing, verify_charge_order
from .cluster import (
    BrickSeq,
    CMatrixState,
    GreenWalk,
    Quiver,
    bricks_of_walk,
    enumerate_mgs,
    mutate_state,
    rotate_cfho,
    rotate_charge,
    rotation_matrix,
    run_walk,
)
from .errors import GreenwalkError, NonGreenStep, RotationError
from .ratlin import StrictSystem, strict_feasible

__all__ = [
    "CentralCharge",
    "CrossingReport",
    "Phase",
    "eval_charge",
    "phase_cmp",
    "solve_crossing",
    "verify_charge_order",
    "BrickSeq",
    "CMatrixState",
    "GreenWalk",
    "Quiver",
    "bricks_of_walk",
    "enumerate_mgs",
    "mutate_state",
    "rotate_cfho",
    "rotate_charge",
    "rotation_matrix",
    "run_walk",
    "GreenwalkError",
    "NonGreenStep",
    "RotationError",
    "StrictSystem",
    "strict_feasible",
]

__version__ = "0.1.0"
