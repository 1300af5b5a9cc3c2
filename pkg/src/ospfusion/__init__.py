"""Exact fusion-ring tables for the Z2-orbifold of the affine vertex operator superalgebra L_osp(1|2)(k,0)."""

from .formal import FormalSum
from .kernel import CHECKS, FusionTable, VerificationReport, fuse_sums, verify
from .labels import (
    DomainError,
    LabelParseError,
    Level,
    OspFusionError,
    OspOrbLabel,
    Sector,
    Twist,
    UnsupportedSectorError,
    enumerate_labels,
    format_label,
    parse_label,
    sector_mul,
)
from .orbifold import (
    component_weight,
    counts,
    decompose,
    dual,
    fuse,
    fuse_twisted_twisted,
    weight_collisions,
    weight_profile,
)
from .sl2 import Sl2OrbLabel, sign_minus, sign_plus, sl2_fuse, sl2_sigma_eigenvalue, sl2_weight
from .virasoro import VirLabel, n_coeff, vir_central_charge, vir_fuse, vir_weight

__version__ = "0.1.0"
