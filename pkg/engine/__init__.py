"""ChoquetKit engine package

Exact capacities, Choquet integrals, the mechanized proof steps and the
verifier for submodular <=> convex Choquet integral.
"""

from .capacity import (
    Event,
    Capacity,
    ViolationKind,
    ViolationReport,
    ConcaveDistortion,
    build_capacity,
    additive_capacity,
    distorted_capacity,
    check_submodular_exhaustive,
    check_submodular_local,
    random_monotone_capacity,
    random_submodular_capacity,
)
from .choquet import (
    PointFunction,
    IntFunction,
    level_set,
    indicator,
    sup_norm,
    shift_nonnegative,
    choquet_layer_cake,
    choquet_sorted,
    choquet_integral,
    choquet_integer,
    dyadic_approximation,
)
from .proof_kit import (
    LatticePoint,
    InequalityStep,
    InductionCertificate,
    lemma_sets,
    check_lemma_identities,
    events_ak_bk,
    check_event_decomposition,
    halving_bound,
    halving_chain,
    halving_identity,
    induction_certificate,
    rational_certificate,
    render_certificate,
)
from .verifier import (
    ScanReport,
    check_subadditivity,
    check_convexity,
    convexity_grid_violation,
    indicator_counterexample,
    exhaustive_subadditivity,
    sampled_subadditivity,
    equivalence_scan,
)

__all__ = [
    # capacity
    'Event',
    'Capacity',
    'ViolationKind',
    'ViolationReport',
    'ConcaveDistortion',
    'build_capacity',
    'additive_capacity',
    'distorted_capacity',
    'check_submodular_exhaustive',
    'check_submodular_local',
    'random_monotone_capacity',
    'random_submodular_capacity',

    # choquet
    'PointFunction',
    'IntFunction',
    'level_set',
    'indicator',
    'sup_norm',
    'shift_nonnegative',
    'choquet_layer_cake',
    'choquet_sorted',
    'choquet_integral',
    'choquet_integer',
    'dyadic_approximation',

    # proof kit
    'LatticePoint',
    'InequalityStep',
    'InductionCertificate',
    'lemma_sets',
    'check_lemma_identities',
    'events_ak_bk',
    'check_event_decomposition',
    'halving_bound',
    'halving_chain',
    'halving_identity',
    'induction_certificate',
    'rational_certificate',
    'render_certificate',

    # verifier
    'ScanReport',
    'check_subadditivity',
    'check_convexity',
    'convexity_grid_violation',
    'indicator_counterexample',
    'exhaustive_subadditivity',
    'sampled_subadditivity',
    'equivalence_scan',
]
