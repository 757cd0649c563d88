"""Pumping tools for the two-handed tile assembly model.

Exact lattice and rational geometry, tile-system simulation, and the
constructive pumping of repetitious assemblies.
"""

from .curves import (
    CurveReport,
    CurveSystem,
    PolyChain,
    RPoint,
    ViolationWitness,
    check_stripe_lemma,
    find_violation,
    gen_noninteger_example,
    reduce_step,
    self_translation_intersection,
    stripe_bound,
    validate_curve_system,
    verify_witness,
)
from .errors import FormatError, TheoremViolation
from .lattice import (
    Point,
    Vector,
    connected_components,
    find_nonconflicting_component,
    fixed_polyominoes,
    make_shape,
    shape_walk,
    translate_shape,
)
from .pumping import (
    PumpTrace,
    Repetition,
    certify_producible_small,
    find_repetitions,
    pump,
    pump_once,
    staged_union_plan,
)
from .tiles import (
    Assembly,
    StrengthFn,
    TileSystem,
    TileType,
    attachments,
    binding_graph,
    canonicalize,
    enumerate_producible,
    is_stable,
    is_terminal_bounded,
    min_cut_value,
    union_assemblies,
)

__version__ = "0.1.0"
