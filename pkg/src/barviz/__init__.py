"""Bar visibility representations: construction and verification."""

from .bars import Bar, BarLayout, LayoutError
from .graph import BlockCutTree, Graph, GraphError, block_cut_tree, cut_vertices, is_isomorphic, lobes
from .layout import (
    BoundReport,
    VerificationError,
    k5_layout,
    merge_copies,
    one_bar_layout,
    small_graph_layout,
    split_pipeline,
    st_numbering,
    tt_layout,
    two_bar_layout,
    visibility_bound,
)
from .oracle import VerifyReport, verify_representation, visibility_graph
from .planarity import PlanarEmbedding, cutvertices_on_common_face, embed, faces, is_bar_visibility_graph, is_planar
from .split import (
    BudgetExceeded,
    SplitInstance,
    SplitMap,
    ValidationReport,
    decompose_into_paths,
    prune_to_subgraph,
    search_biplanar,
    sigma_exact,
    split_from_decomposition,
    validate_split,
)
from .transfer import TransferReport, TransferStep, check_transfer, reduce_cut_copies, transfer

__version__ = "0.1.0"
