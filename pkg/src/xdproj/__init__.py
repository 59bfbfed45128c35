"""Signal compression by projection between spaces of different dimension.

Semi-tensor products, the mixed-dimension vector space they induce,
projectors between dimensions, and a codec for 1-D, 2-D and order-d
signals built on them, plus compressed-sensing comparison quantities.
"""

__version__ = "0.1.0"

from ._checks import Side
from .codec import (
    CodecSpec,
    RoundTripReport,
    compress_1d,
    compress_2d,
    compress_nd,
    compress_nd_kron,
    decompress_1d,
    decompress_2d,
    decompress_nd,
    decompress_nd_kron,
    roundtrip,
    staged_kron_operator,
)
from .cs_analysis import (
    CsSummary,
    KronInvarianceReport,
    coherence,
    kron_invariance_report,
    l0_norm,
    recovery_bound,
    spark,
    stp_measure,
)
from .errors import (
    CapacityError,
    DegenerateError,
    DimensionError,
    DimensionOverflowError,
    ParseError,
    ShapeError,
    XDError,
)
from .hypermatrix import apply_axis, axis_operator, contract, devectorize, vectorize
from .kernels import BACKEND
from .projection import Projector, project, projector, projector_definition
from .stp import expand, kron, one_vector, stp_mm, stp_mv
from .xspace import (
    CanonicalVector,
    canonical,
    equivalent,
    xadd,
    xangle,
    xdist,
    xinner,
    xnorm,
    xscale,
    xsub,
)
