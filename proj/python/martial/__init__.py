"""Schubert symbols, nil Hecke actions, genera and q-statistics."""

from ._martial import (
    InconsistencyError,
    Permutation,
    ValidationError,
    affine_linear_genus,
    comaj,
    component_evaluate,
    coproduct,
    distribution_table_csv,
    equidistribution_sn,
    exp_triangle,
    garsia_gessel_check,
    klyachko_genus,
    load_caches,
    lr_coefficients,
    monk_product,
    q_klyachko_genus,
    q_nenashev_distributions,
    rectification_witness,
    reduced_words,
    run_cli,
    save_caches,
    schubert_polynomial,
    stanley_coefficients,
    structure_constants,
    suites,
    verify,
)

__all__ = [
    "InconsistencyError",
    "Permutation",
    "ValidationError",
    "affine_linear_genus",
    "comaj",
    "component_evaluate",
    "coproduct",
    "distribution_table_csv",
    "equidistribution_sn",
    "exp_triangle",
    "garsia_gessel_check",
    "klyachko_genus",
    "load_caches",
    "lr_coefficients",
    "monk_product",
    "q_klyachko_genus",
    "q_nenashev_distributions",
    "rectification_witness",
    "reduced_words",
    "run_cli",
    "save_caches",
    "schubert_polynomial",
    "stanley_coefficients",
    "structure_constants",
    "suites",
    "verify",
]
