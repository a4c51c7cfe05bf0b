"""Sparse interpolation of polynomials given by straight-line programs."""

from .baselines import dense_interpolate, garg_schost, gs_lambda
from .errors import InterpolationFailure, UnsupportedConfiguration
from .kronecker import KroneckerMap, interpolate_multivariate, kronecker_forward, kronecker_inverse
from .ledger import ProbeLedger
from .primes import ModuliSet, PrimeTable, coprime_moduli, crt, random_prime_in, sieve
from .recursive import (InterpConfig, construct_approximation, expected_probe_count,
                        find_ok_prime, interpolate, ok_prime_lambda, probe_degree_cap)
from .ring import DEFAULT_RING, CyclicPoly, RingSpec, cyclic_add, cyclic_mul, cyclic_sub, sparsity
from .slp import (Instruction, Slp, SlpError, eval_points, format_slp, parse_slp, probe,
                  probe_diff, random_sparse, slp_from_monomials, slp_from_sparse)
from .sparsepoly import SparsePoly, collision_count, parse_sparse, reduce_mod_cyclic
from .zerotest import zero_test

__version__ = "0.1.0"
