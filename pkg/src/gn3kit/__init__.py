"""Pure braids in G_n^3 and G~_n^3: maps, Z2 free-product invariants,
non-cancellability certificates and bounded rewrite exploration."""

from .cancellability import (
    CandidatePair,
    Certificate,
    analyse,
    find_pairs,
    invariant_obstruction,
    theorem42_check,
)
from .explorer import (
    NotFound,
    RewritePath,
    SearchConfig,
    bfs_connect,
    is_locally_rigid,
    verify_chain,
)
from .homomorphisms import CWordSpec, c_gn3, embed_i, f_ijk, phi, pi, pr, tilde_c, tilde_phi
from .invariants import (
    TripleSelector,
    abelian_profile,
    occurrence_index,
    occurrence_indices,
    reduce,
    tilde_w_invariant,
    w_invariant,
)
from .kernels import BACKEND
from .presentations import RewriteStep, pb_relators, rewrite_steps
from .words import (
    BraidLetter,
    BraidWord,
    FreeProductWord,
    Gn3Word,
    IndexLetter,
    ParseError,
    SigmaLetter,
    TildeWord,
    TriLetter,
    WordError,
    commutator,
    concat,
    inverse,
    parse,
)

__version__ = "0.1.0"
