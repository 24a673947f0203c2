"""Exact computations in the automorphism groups of right-angled Artin
groups: graph machinery, word normal forms, LS generators as executable
maps, join and sign-class decompositions, and certified lower bounds on
the outer automorphism groups of Aut and Out."""

from .graphs import (
    DEFAULT_MAX_VERTICES,
    GraphParseError,
    GraphPermutation,
    SimplicialGraph,
    graph_automorphisms,
    graph_to_text,
    is_asymmetric,
    join,
    parse_graph,
)
from .words import (
    Letter,
    Word,
    abelianize,
    concat,
    conjugate,
    invert_word,
    normal_form,
    parse_word,
    reduce_word,
    word_to_str,
    words_equal,
)
from .domination import (
    DominationStructure,
    dominates,
    domination_structure,
    has_dominated_vertex,
    verify_order_antisymmetry,
)
from .automorphisms import (
    GraphSymmetry,
    Inversion,
    LSGenerator,
    PartialConjugation,
    RaagAutomorphism,
    Transvection,
    abelianization_matrix,
    apply_automorphism,
    automorphism_power,
    automorphisms_equal,
    compose,
    conjugate_automorphism,
    enumerate_ls_generators,
    identity_automorphism,
    invert_automorphism,
    ls_to_automorphism,
    not_inner_by_abelianization,
    validate_automorphism,
    verify_conjugation_table,
)
from .decomposition import (
    JoinDecomposition,
    LateralLattice,
    SignAction,
    SignClassPartition,
    central_inversion,
    centralizer_order,
    check_sign_matrix_centralizes,
    iota_noncentrality_check,
    join_decomposition,
    lateral_automorphism,
    lateral_conjugation_relations,
    lateral_transvections,
    out_aut_lower_bound_center,
    sign_automorphism,
    sign_class_equivalence_report,
    sign_classes,
    social_vertices,
    verify_lateral_lattice,
    verify_split_normality,
)
from .bounds import (
    AUSTERE,
    AUSTERE_WITH_STAR_CUTS,
    NEITHER,
    AusterityReport,
    SilWitness,
    austerity,
    eta_relation_check,
    find_sil,
    gl_order,
    gl_order_bruteforce,
    out_out_austere_order,
    partial_conjugations,
    pc_defining_graph,
    star_cut_bound,
)
from .families import cycle_hub, frucht, join_complete, validate_spokes
from .report import Check, Report

__version__ = "0.1.0"
