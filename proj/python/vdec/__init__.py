"""Vertex-distinguishing edge colorings of trees.

Thin python surface over the compiled `_vdec` extension: graph construction,
tree classification, the constructive colorer, the exact backtracking solver,
the splitting/spanning-tree bounds and free-tree enumeration.
"""

try:
    from . import _vdec as _impl   # installed wheel layout
except ImportError:                # plain CMake build: extension on sys.path
    import _vdec as _impl

_EXPORTED = [
    "EdgeColoring",
    "SimpleGraph",
    "Tree",
    "VdecError",
    "as_tree",
    "bound_report",
    "build_diam_four",
    "build_double_star",
    "build_graph",
    "build_path",
    "build_star",
    "canonical_id",
    "classify_tree",
    "color_diam4",
    "color_double_star",
    "color_set",
    "color_tree",
    "conjecture_lower_bound",
    "cor1_bound",
    "count_vdecs",
    "degree_profile",
    "diameter",
    "enumerate_trees",
    "equitable_finish",
    "exact_chi_es",
    "exact_chi_s",
    "find_balancing_vertex",
    "predict_chi_s",
    "prufer_tree_count",
    "relabel_consecutive",
    "survey_tree",
    "verify",
]

for _name in _EXPORTED:
    globals()[_name] = getattr(_impl, _name)

__version__ = getattr(_impl, "__version__", "dev")
__all__ = _EXPORTED
