"""Exact Chern-number calculus for projective bundles and rational complex cobordism."""

from __future__ import annotations

from .catalog import bundle_from_json, load_ring, manifold
from .classes import (
    ChernData,
    ChernVector,
    LinearFunctional,
    Manifold,
    apply,
    chern_number,
    chern_vector,
    chi_functionals,
    chi_y_at,
    euler_functional,
    milnor_s,
    pontryagin_functionals,
    segre,
    signature_functional,
)
from .cobordism import (
    cobordism_space,
    decompose,
    ideal_slice_I,
    ideal_slice_J,
    monomial_vector,
    span_report,
    upper_bound,
    xq_decomposition,
)
from .errors import InvariantError, PreconditionError, SchemaError
from .families import (
    DolgachevModel,
    Xq_vector,
    alpha_generator,
    alpha_vector,
    build_Eq,
    build_Yq,
    family_chern,
    family_table,
    product_chern_vector,
)
from .projective import (
    BundleOnBase,
    chern_number_oracle,
    chern_number_pbundle,
    f_class,
    f_closed_form,
    pbundle_chern_vector,
    pbundle_oracle_ring,
    positivity_scan,
    symbolic_bundle,
)
from .ring import (
    RingElement,
    RingPresentation,
    integrate,
    product_ring,
    ring_mul,
    ring_validate,
)

__version__ = "0.1.0"
