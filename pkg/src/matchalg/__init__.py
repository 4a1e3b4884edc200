"""Exact-arithmetic computer algebra for matching Rota-Baxter operator families,
matching dendriform algebras and the cohomology theories that control their
deformations.

Everything is computed over the exact rationals: axiom checks return
reproducible failure certificates, differentials are materialized as matrices,
and cohomology dimensions come out of exact rank computations.
"""

from matchalg.linalg import DenseMatrix, DenseTensor, rank, kernel_dim, cohomology_dim
from matchalg.report import CertificateReport, Failure
from matchalg.algebra import (
    Algebra,
    Bimodule,
    LinearMap,
    adjoint_bimodule,
    check_algebra,
    check_bimodule,
    coadjoint_bimodule,
    dual_bimodule,
    semidirect_product,
)
from matchalg.operators import (
    LabelSet,
    OperatorFamily,
    RMatrixFamily,
    check_matching_aybe,
    check_mrrba,
    check_skew_symmetric,
    family_from_central_elements,
    family_from_rb_pair,
    operators_from_rmatrix,
    operators_on_dual,
    relabel,
    star_product,
)
from matchalg.dendriform import (
    MatchingDendriform,
    adjunction_transport,
    check_mda,
    check_mda_morphism,
    extend_to_labelled_dendriform,
    functor_g,
    induce_dendriform,
    semidirect_embedding,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
