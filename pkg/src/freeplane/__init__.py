"""freeplane: finite incidence geometry, free extensions, and embedding search."""

from .axioms import (
    ValidationReport,
    exceptional_points,
    is_projective,
    nontrivial_lines,
    parallel_pairs,
    trivial_lines,
    unjoined_pairs,
    validate,
)
from .confinement import CoreResult, confined_core, is_confined_finite
from .errors import (
    BudgetError,
    ContainmentError,
    EncoderError,
    FreeplaneError,
    NotAPlaneError,
    NotLengthThreeError,
    ParseError,
    PreconditionError,
    ResourceError,
    StructureError,
    UniquenessError,
)
from .extension import (
    ExtensionMode,
    ExtensionTrace,
    extend,
    extend_once,
    is_fixed_point,
)
from .groups import PermutationGroup, automorphism_group, group_isomorphic
from .encoders import (
    BrokenEncoder,
    Encoder,
    IdentityEncoder,
    NaiveGraphEncoder,
    PluginEncoder,
    get_encoder,
)
from .harness import (
    CheckResult,
    HarnessReport,
    check_restriction,
    completeness_witness,
    extend_embedding,
    fullness_check,
    spb_check,
)
from .lattice import (
    GeometricLattice,
    check_geometric_length3,
    complete_subplane_report,
    from_lattice,
    is_complete_subplane,
    is_sublattice,
    to_lattice,
)
from .morphisms import (
    Morphism,
    bi_embeddable,
    embeddings,
    isomorphisms,
    verify_morphism,
)
from .serialization import (
    dumps_structure,
    load_structure,
    loads_structure,
    save_structure,
)
from .structure import IncidenceStructure

__version__ = "0.1.0"
