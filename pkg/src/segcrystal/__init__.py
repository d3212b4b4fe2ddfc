"""Crystal combinatorics on multisegments, with tableau and wall models.

The core objects are multisegments over a type-A root system, finite or
affine.  Raising and lowering operators act through a signature rule,
breadth-first generation builds the reachable graph to a degree bound, an
independent oracle enumerates elements weight by weight, and two further
realizations — semistandard tableaux for the finite types, walls of
colored bars for the affine ones — are verified to transport the same
structure.
"""

from .crystal_graph import (
    DEFAULT_NODE_CAP,
    CrystalGraph,
    CrystalNode,
    NodeCapExceeded,
    VerificationReport,
    export_dot,
    export_json,
    export_text,
    generate,
    import_json,
    verify_inverse,
    verify_multiplicities,
    verify_stembridge,
    verify_strings,
    weight_multiplicities,
)
from .crystal_ops import (
    apply_word,
    epsilon,
    lowering_operator,
    negate_index,
    phi,
    raising_operator,
    reduce_signature,
    signature_word,
)
from .multisegment import Multisegment, Segment, canonical_segment, canonicalize
from .oracle import (
    aperiodic_count,
    enumerate_by_degree,
    enumerate_multisegments,
    kostant_count,
)
from .root_data import AFFINE_A, FINITE_A, CartanType
from .tableaux import (
    LargeTableau,
    RowCountMatrix,
    build_representative,
    tableau_epsilon,
    tableau_lowering,
    verify_tableau_model,
)
from .young_walls import (
    WallBar,
    YoungWall,
    render_ascii,
    verify_wall_model,
    wall_dim_vector,
    wall_epsilon,
    wall_lowering,
    wall_phi,
    wall_raising,
    wall_to_json,
)

__all__ = [
    "AFFINE_A",
    "DEFAULT_NODE_CAP",
    "FINITE_A",
    "CartanType",
    "CrystalGraph",
    "CrystalNode",
    "LargeTableau",
    "Multisegment",
    "NodeCapExceeded",
    "RowCountMatrix",
    "Segment",
    "VerificationReport",
    "WallBar",
    "YoungWall",
    "aperiodic_count",
    "apply_word",
    "build_representative",
    "canonical_segment",
    "canonicalize",
    "enumerate_by_degree",
    "enumerate_multisegments",
    "epsilon",
    "export_dot",
    "export_json",
    "export_text",
    "generate",
    "import_json",
    "kostant_count",
    "lowering_operator",
    "negate_index",
    "phi",
    "raising_operator",
    "reduce_signature",
    "render_ascii",
    "signature_word",
    "tableau_epsilon",
    "tableau_lowering",
    "verify_inverse",
    "verify_multiplicities",
    "verify_stembridge",
    "verify_strings",
    "verify_tableau_model",
    "verify_wall_model",
    "wall_dim_vector",
    "wall_epsilon",
    "wall_lowering",
    "wall_phi",
    "wall_raising",
    "wall_to_json",
    "weight_multiplicities",
]

__version__ = "0.1.0"
