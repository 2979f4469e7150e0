"""Cyclic subgroup graphs of finite groups.

Build groups from the supported families, construct their cyclic subgroup
graphs, compute graph invariants, and audit the closed-form vertex/edge/
degree/diameter predictions against brute force.
"""

import json as _json

from cyclegraph._core import (
    GammaGraph,
    Group,
    Subgroup,
    all_subgroups,
    build_gamma,
    count_subgroups_of_order,
    cyclic,
    cyclic_subgroups,
    dicyclic,
    dihedral,
    direct_product,
    distance,
    element_order,
    factorize,
    find_conjugation_exponent,
    from_cayley_table,
    from_matrix_generators,
    generalized_quaternion,
    is_nilpotent,
    is_prime,
    known_discrepancies,
    load_cayley_table,
    minimal_noncyclic,
    render_dot,
    render_json,
    summarize,
)
from cyclegraph._core import audit_file_json as _audit_file_json
from cyclegraph._core import audit_preset_json as _audit_preset_json


def audit_preset(name="default"):
    """Run a built-in audit corpus ("paper-figures" or "default") and return
    the report as a dict."""
    return _json.loads(_audit_preset_json(name))


def audit_file(path):
    """Run the audit over a corpus spec file and return the report as a dict."""
    return _json.loads(_audit_file_json(path))


__all__ = [
    "GammaGraph",
    "Group",
    "Subgroup",
    "all_subgroups",
    "audit_file",
    "audit_preset",
    "build_gamma",
    "count_subgroups_of_order",
    "cyclic",
    "cyclic_subgroups",
    "dicyclic",
    "dihedral",
    "direct_product",
    "distance",
    "element_order",
    "factorize",
    "find_conjugation_exponent",
    "from_cayley_table",
    "from_matrix_generators",
    "generalized_quaternion",
    "is_nilpotent",
    "is_prime",
    "known_discrepancies",
    "load_cayley_table",
    "minimal_noncyclic",
    "render_dot",
    "render_json",
    "summarize",
]
