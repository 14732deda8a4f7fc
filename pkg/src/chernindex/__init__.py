"""Exact characteristic-class and index calculus on complete intersections."""

from .algebra import (
    GradedClass,
    PowerSeries,
    Rational,
    TwistPoly,
    graded_mul,
    series_div,
    series_exp,
    series_log,
)
from .bundles import (
    ChernVector,
    VirtualBundle,
    bundle_sum,
    chern_classes,
    determinant,
    difference,
    dual,
    integrality_check,
    line_bundle,
    sym_power,
    tensor,
    todd,
)
from .dsl import evaluate, parse_bundle, parse_variety, pretty
from .errors import (
    ChernIndexError,
    DimensionMismatchError,
    DomainError,
    ParseError,
    ValidationError,
)
from .hrr import euler_characteristic
from .operators import (
    OperatorSpec,
    SymbolKClass,
    atiyah_operator,
    index_polynomial,
    principal_parts_ch,
    symbol_class,
    topological_index,
)
from .variety import (
    CompleteIntersection,
    cotangent_ch,
    integrate,
    paper_compat_cotangent_ch,
    tangent_ch,
)

__version__ = "0.1.0"
