"""GF(2) polynomial algebra for trinomial multiples of maximum-weight
polynomials and the orthogonal arrays built from their shift-register
sequences."""

from .gf2poly import PolyGF2, PolySpecError, add, divrem, gcd, mul, parse, powmod_x, reciprocal, weight
from .maxweight import MaxWeightPoly, construct, enumerate_mw, gcd_obstruction, reciprocal_mw, times_x_plus_1
from .classify import ClassifyReport, Unverifiable, classify, is_irreducible, is_primitive, period
from .factor import factorize_mersenne
from .divisibility import TrinomialHit, corollary1_sweep, trinomial_multiples, verify_table1
from .lfsr import LfsrSequence, generate, prop2_check
from .oa import StrengthReport, WindowCode, build_code, strength_direct, strength_dual

__version__ = "0.1.0"
