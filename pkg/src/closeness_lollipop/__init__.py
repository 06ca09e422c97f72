"""Exponential-decay closeness and its residual/additional variants, with
exact closed forms for lollipop graphs."""

from .numerics import Dyadic, DyadicOverflowError, pow2
from .graph import (
    UNREACHABLE,
    ClosenessReport,
    DistanceRow,
    Graph,
    GraphError,
    add_edge,
    bfs_row,
    build_graph,
    closeness,
    closeness_oracle,
    remove_edge,
    remove_vertex,
    vertex_closeness,
)
from .families import (
    LollipopSpec,
    closeness_complete,
    closeness_cycle,
    closeness_lollipop,
    closeness_path,
    gen_complete,
    gen_cycle,
    gen_lollipop,
    gen_path,
)
from .robustness import lr_lollipop, lr_oracle, vr_lollipop, vr_oracle
from .additional import additional_lollipop, additional_oracle

__version__ = "0.1.0"
