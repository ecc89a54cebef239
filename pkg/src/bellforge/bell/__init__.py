from bellforge.bell.avn import AvnReport, ghz_avn_check
from bellforge.bell.conditions import (
    RotInvReport,
    condition_three_setting,
    condition_wwwzb,
    condition_wzlpzb,
    ghz4_modified_tensor_max,
    plane_sum,
    rotinv_condition,
    rotinv_critical_visibility,
)
from bellforge.bell.faces import (
    FaceTest,
    bareiss_determinant,
    exact_rank,
    is_face_2q3s,
    product_vertex,
)
from bellforge.bell.functionals import (
    BellFunctional,
    Scenario,
    ardehali,
    catalog_from_json,
    catalog_to_json,
    chsh,
    mabk,
    mermin,
    named_functionals,
    three_setting,
    wu_zong_3q,
)
from bellforge.bell.generate import (
    GeneratedClass,
    canonical_key,
    enumerate_first_order_deltas,
    generate_tight_functionals,
    projection_vectors,
    symmetry_tables,
)
from bellforge.bell.lhv import lhv_bound, lhv_bound_via_vertices, strategy_value_table
from bellforge.bell.seesaw import multilinear_max, quantum_value, wwwzb_family_max

__all__ = [
    "AvnReport",
    "BellFunctional",
    "FaceTest",
    "GeneratedClass",
    "RotInvReport",
    "Scenario",
    "ardehali",
    "bareiss_determinant",
    "canonical_key",
    "catalog_from_json",
    "catalog_to_json",
    "chsh",
    "condition_three_setting",
    "condition_wwwzb",
    "condition_wzlpzb",
    "enumerate_first_order_deltas",
    "exact_rank",
    "generate_tight_functionals",
    "ghz4_modified_tensor_max",
    "ghz_avn_check",
    "is_face_2q3s",
    "lhv_bound",
    "lhv_bound_via_vertices",
    "mabk",
    "mermin",
    "multilinear_max",
    "named_functionals",
    "plane_sum",
    "product_vertex",
    "projection_vectors",
    "quantum_value",
    "rotinv_condition",
    "rotinv_critical_visibility",
    "strategy_value_table",
    "symmetry_tables",
    "three_setting",
    "wu_zong_3q",
]
