"""Partial orders on matrices and finite semigroups.

Exact and floating-point matrices over several scalar domains, generalized
inverses, the entrywise, Conrad, star and Loewner orders, and a finite
semigroup lab for checking order axioms exhaustively.
"""

from ._accel import BACKEND, HAS_NUMBA
from .generators import gen_psd, gen_psd_exact, gen_star_pair, gen_star_pair_exact
from .ginv import (InverseKind, SearchSpaceTooLarge, enumerate_inverses, full_rank_factorization, is_inverse,
                   moore_penrose, penrose_residuals, satisfies_penrose)
from .matrix import (DEFAULT_CTX, Matrix, ProductKind, ShapeError, ToleranceContext, conj_transpose, hadamard,
                     kronecker, mat_eq, mat_mul, product, rank)
from .orders import (CONRAD, CONRAD_HADAMARD, ENTRYWISE, IDENTITY, LEFT_STAR, LOEWNER, RIGHT_STAR, ConradFailure,
                     OrderKind, conrad_leq, conrad_leq_oracle, conrad_witness, entrywise_compat_counterexample,
                     entrywise_leq, left_star_leq, leq, parse_order, right_star_leq)
from .psd import (NotPsdError, PsdCertificate, is_hermitian, is_psd, loewner_leq, psd_approx_term,
                  psd_necessary_minors, psd_sqrt)
from .scalar import CF64, GAUSS, INT, RAT, DomainError, GaussianRational, mod
from .semigroup import (CheckReport, FiniteSemigroup, NotAssociativeError, OrderAxiomError, Relation,
                        check_order, conrad_relation, full_transformation_semigroup, hasse_edges,
                        is_regular_semigroup, is_weakly_separative, largest_compatible_order, materialize_order,
                        matrix_semigroup, null_semigroup, parse_generator_spec, s_invariant)
from .textio import ParseError, parse_matrix, parse_semigroup, read_matrix, read_semigroup, to_dot

__version__ = "0.1.0"
