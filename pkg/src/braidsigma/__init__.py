"""Braid-word invariants, Garside normal forms, the weak Bruhat lattice,
and exact homology of reversing and ascending-link subcomplexes."""

from .complexes import (
    HomologyProfile,
    SimplicialComplex,
    order_complex,
    reduced_homology,
    smith_normal_form,
)
from .garside import (
    NormalForm,
    braids_equal,
    gcd_with_delta,
    left_weighted,
    normal_form,
    perm_braid_word,
    prefix_leq,
    sandwich,
)
from .links import (
    AscendingLinkSpec,
    Character,
    ClassificationReport,
    LinkCell,
    OnePositivePair,
    ascending_link_vertices,
    chi_m_n,
    classify_links,
    delta_value,
    eval_on_braid,
    eval_on_perm,
    kdot_less,
    one_positive_pair,
    parse_character,
    twist,
)
from .perms import (
    Permutation,
    coxeter_length,
    inversion_set,
    join,
    maximal_vertices,
    meet,
    minimal_vertices,
    nerve_of_stars,
    pw_vertices,
    rev_vertices,
    symmetric_group,
    weak_leq,
)
from .words import (
    BraidInvariants,
    BraidWord,
    concat,
    delta_word,
    erase_strands,
    free_reduce,
    invariants_of,
    inverse_word,
    mirror,
    parse_braid_word,
    word_to_text,
)

__version__ = "0.1.0"
