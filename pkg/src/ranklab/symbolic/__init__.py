"""Infinite families of complete theories described by a tree grammar."""

from .cardinals import ALEPH0, CONTINUUM, Cardinal
from .dsl import format_family, parse_family
from .generic import (
    CONTINUUM_KERNEL,
    ContinuumKernel,
    count_generic,
    count_nongeneric,
    generic_theories,
    is_generic_sentence,
    is_p_complete,
)
from .nodes import (
    EMINIMAL,
    EMPTY,
    FULL,
    Family,
    adjoin,
    build_tower,
    cofactor,
    contains,
    eminimal,
    empty,
    fin,
    full,
    guard,
    in_closure,
    limitsum,
    omegasum,
    union,
)
from .oracle import rank_by_definition_oracle
from .points import ONE_POINT, ZERO_POINT, PointTheory, format_point, parse_point
from .rank import cardinality, rank_degree, restrict, rhd_pt, rhd_tt
from .spectra import PtSpectrum, SpectrumRd, pt_spectrum, ranking_sentence, spectrum_rd
from .topology import (
    accumulation_points,
    cb_rank,
    closure,
    enumerate_points,
    is_e_closed,
    isolated_points,
    isolating_sentence,
    least_generating_set,
    separating_sentence,
)

__all__ = [name for name in dir() if not name.startswith("_")]
