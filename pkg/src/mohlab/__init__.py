"""Exact computations around Moh's prime ideals in k[[x, y, z]].

The package is organised bottom-up:

    field      exact scalars over Q and F_p, Lucas binomials, nullspaces
    poly       polynomials under the local ds ordering, parser/printer
    semigroup  numerical semigroups, factorizations, Frobenius numbers
    sigma      sigma-order, sigma-leading form and tail, the spaces W_r
    param      the Moh parametrization, kernel certificates, V_r bounds
    mora       Mora normal form, standard bases, Artinian lengths
    lab        fixtures and the minimal-generation pipeline
    cli        the ``mohlab`` command
"""

from mohlab.field import QQ, Matrix, PrimeField, Rationals, field_for, lucas_binomial, nullspace
from mohlab.poly import Polynomial, Ring, compare_ds, ecart, ord_and_leading_form, parse_poly, spoly
from mohlab.semigroup import NumericalSemigroup, contains, factorizations, frobenius
from mohlab.sigma import SigmaContext, sigma_order_and_split, w_basis
from mohlab.param import (
    MohParams,
    Parametrization,
    complete_tail,
    evaluate,
    find_min_sigma_order,
    vr_upper_bound,
)
from mohlab.mora import (
    artinian_length,
    is_standard_basis,
    mora_normal_form,
    standard_basis,
)
from mohlab.lab import lower_bound, moh_generators, sally_reduction_check, verify_minimal_generation

__version__ = "0.1.0"
