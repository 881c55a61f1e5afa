"""Exact strictification of weak group actions on finite-dimensional
(weak) Hopf algebras, with verified module-category equivalence data.

Everything is computed over the rationals or a prime field with no floats
anywhere; every axiom used is also available as an executable check.
"""

from .fields import Field, FieldError, field_from_name
from .groups import (
    FiniteGroup,
    GroupExtension,
    SectionCocycle,
    cocycle_from_section,
    extension_d4,
    extension_from_normal,
    is_normal,
    make_cyclic,
    make_dihedral,
    make_klein_four,
    make_product,
    quotient_by_normal,
    subgroup_closure,
)
from .algebras import (
    AlgebraElement,
    CarrierTooLarge,
    FieldNotEnumerable,
    NotInvertible,
    StructuredAlgebra,
    Subalgebra,
    center_basis,
    counital_subalgebra,
    epsilon_s,
    epsilon_t,
    function_algebra,
    group_algebra,
)
from .axioms import (
    AxiomReport,
    CheckResult,
    check_algebra,
    check_antipode,
    check_coalgebra,
    check_weak_bialgebra,
    classify,
)
from .actions import (
    GGrading,
    GHopfAlgebra,
    WeakGAction,
    check_g_grading,
    check_g_hopf,
    check_hopf_action,
    check_weak_action,
    counterexample_action,
    trivial_action,
    trivial_grading,
    weak_action_from_extension,
)
from .strictify import Strictification, strictify, verify_strictification
from .modules import (
    ModuleMorphism,
    ModuleNotHomogeneous,
    ModuleRep,
    NotAMorphism,
    TensorDecomp,
    TensorUnit,
    alpha_coherence_witness,
    alpha_iso,
    check_module,
    conjugate_module,
    eta0_iso,
    eta2_iso,
    eta2_triple_coherence,
    functor_on_morphism,
    functor_on_object,
    grading_respected,
    hom_space,
    psi_coherence_witness,
    psi_iso,
    regular_module,
    tensor_modules,
    tensor_morphism,
    theta_iso,
    trivial_module,
    twist_module,
    unit_component,
)
from .ribbon import (
    NonInvertibleTwist,
    RibbonData,
    braiding_morphism,
    check_ribbon,
    check_ribbon_support,
    transfer_ribbon,
    twist_morphism,
)
from .obstruction import (
    ObstructionProblem,
    ReplayResult,
    SearchOutcome,
    WrongShape,
    enumerate_units,
    forced_constraint_replay,
    search_solutions,
)

__version__ = "0.1.0"
