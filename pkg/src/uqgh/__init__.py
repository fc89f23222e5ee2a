"""Exact computations in the Hopf algebra U_{g,h} over Q(q)."""

from .center import (
    CentralCharacterPoint,
    casimir,
    central_character,
    characters_equal,
    hc_projection,
    is_central,
    splitting_element,
    verma_splitting_element,
)
from .field import Q, RatFunc, evaluate, qfact, qint
from .hopf import TensorElement, antipode, check_hopf_axioms, coproduct, counit
from .parser import ParseError, parse, parse_element, parse_scalar
from .pbw import (
    AlgebraElement,
    anti_involution,
    e_fpow_commutator,
    generator,
    mul_by_generator,
    multiply,
    normalize,
)
from .rep import (
    ExtensionParams,
    HighestWeightData,
    WeightModule,
    act,
    check_module,
    decompose,
    direct_sum,
    dual_module,
    ext_dims_torus,
    extension_module,
    highest_weight_vectors,
    is_split_selfextension,
    isomorphic,
    simple_module,
    tensor,
    torus_module,
    twisted_dual,
)
from .verma import (
    TruncatedVerma,
    is_simple_verma,
    maximal_vectors,
    simple_quotient_data,
    verma,
    verma_hom,
)

__version__ = "0.1.0"
