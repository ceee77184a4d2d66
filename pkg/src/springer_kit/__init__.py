"""Combinatorics of unipotent classes, symbols and the Springer
correspondence for finite symplectic groups."""

from .cuspidal import (
    CuspidalDatum,
    VerificationReport,
    closed_form_mu,
    cuspidal_parameters,
    generic_denominator,
    j_induce,
    special_character,
    sweep,
    verify_multiplicity_one,
)
from .errors import *  # noqa: F401,F403
from .partitions import (
    Bipartition,
    Partition,
    SymplecticClassLabel,
    component_group_order,
    double,
    enumerate_symplectic_classes,
    is_symplectic_class,
    n_delta,
    validate_partition,
)
from .springer import SpringerImage, is_springer_image, springer, springer_inverse, wavefront_partition
from .symbols import (
    Symbol,
    add,
    bipartition_to_symbol,
    canonical,
    equivalent,
    is_Y_symbol,
    make_symbol,
    shift,
    symbol_to_bipartition,
    unit,
    unshift,
)
from .weyl import (
    HarishChandraDatum,
    InvolutionDatum,
    SeriesLabel,
    centralizer_weyl,
    component_group_A,
    enumerate_quasi_isolated,
    h1_orbits,
    harish_chandra_levi,
    series_labels,
    weyl_group,
)

__version__ = "0.1.0"
