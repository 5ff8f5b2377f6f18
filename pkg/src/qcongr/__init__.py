"""qcongr: exact verification of q-series congruences and identities.

Everything is computed in exact rational arithmetic over Z[q]; congruence
checks reduce modulo powers of [p]_q (the p-th cyclotomic polynomial).
"""

from .backend import active_kernel
from .congruence import CongruenceResult, ModRing, Modulus, congruent, reduce_mod
from .errors import QCongrError
from .factored import FTerm, cyclotomic, fsum
from .poly import Poly, poly_divrem, poly_exact_div, poly_gcd
from .qobjects import legendre, q_binomial, q_fermat_quotient, q_int, q_pochhammer
from .ratfun import RatFun, ratfun_limit_at_one
from .records import VerificationRecord
from .wz import WzPair, identity_check, register_pair, wz_difference_check, wz_telescope

__version__ = "0.1.0"

__all__ = [
    "CongruenceResult",
    "FTerm",
    "ModRing",
    "Modulus",
    "Poly",
    "QCongrError",
    "RatFun",
    "VerificationRecord",
    "WzPair",
    "active_kernel",
    "congruent",
    "cyclotomic",
    "fsum",
    "identity_check",
    "legendre",
    "poly_divrem",
    "poly_exact_div",
    "poly_gcd",
    "q_binomial",
    "q_fermat_quotient",
    "q_int",
    "q_pochhammer",
    "ratfun_limit_at_one",
    "reduce_mod",
    "register_pair",
    "wz_difference_check",
    "wz_telescope",
]
