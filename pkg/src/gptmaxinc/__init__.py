"""Exact compatibility analysis for two-outcome measurements on polytope state spaces."""
from .exactmath import parse_rational, format_rational
from .polytope import Polytope, Face, build, faces, exposed_face, contains
from .gpt import (
    StateSpace, Effect, effect_from_functional, effect_from_vertex_values, constant_effect,
    evaluate, complement, level_face, CoinToss, TwoOutcomeMeasurement, mix,
    NotAnEffect, InconsistentValues, StateSpaceMismatch, OutsideStateSpace,
)
from .lp import LinearProgram, LpOutcome, solve
from .compat import (
    JointWitness, DegComResult, DualCertificate, check_compatible, degcom_half, degcom_free,
    dual_beta, verify_duality, complement_variants,
)
from .maxinc import (
    MaxIncCertificate, DiscriminationTask, check_pair_maxinc, find_maxinc, cross_section,
    section_extent, find_discriminator, joint_would_discriminate,
)
from .channel import HermitianMatrix, ChannelWitnessCase, qubit_channel_case, verify_case

__version__ = "0.1.0"
