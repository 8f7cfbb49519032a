"""Partition/symbol combinatorics for classical nilpotent-orbit dualities.

Public surface: partitions and symbols as immutable values, the three
classical partition classes with their interval decompositions, Springer
parameter maps, dualities, Levi/endoscopic induction and its inverse, and
the multiplicity/wavefront certificate harness.
"""

from .classical import INF, Kind, SignVector, classify, enumerate_class, intervals, jord_bp, step_sequence
from .duality import dual_of_special, dual_partition, dual_via_dominance, dual_via_step_sequence, transport_coords
from .errors import (
    CertificateError,
    ClassMismatchError,
    DomainError,
    HypothesisError,
    InternalCheckError,
    NotSpecialError,
    UnsupportedDefectError,
)
from .induction import (
    Decomposition,
    EndoData,
    LeviShape,
    cup,
    decompose_regular,
    dominance_floor,
    endoscopic_induce,
    levi_induce,
)
from .multiplicity import (
    EndoContext,
    QuadInput,
    build_context,
    enumerate_support,
    form_indicator,
    multiplicity_value,
    sign_factor,
    support_condition,
    tau_from_signs,
    wavefront_certificate,
)
from .partitions import Partition, partition_tuples, partitions_of
from .springer import (
    FamilyCoords,
    SpringerDatum,
    admissible_sign_vectors,
    family_coords,
    partition_of_special_symbol,
    signs_from_coords,
    special_closure,
    special_closure_pair,
    springer_k,
    springer_symbol,
)
from .symbols import (
    Bipartition,
    Symbol,
    bipartition_of,
    dual_symbol,
    family_key,
    family_members,
    is_special_symbol,
    same_family,
    special_member,
    special_symbols,
    symbol_from_bipartition,
)

__version__ = "0.1.0"
