"""
## Overview

Exact class-number arithmetic and a harness that machine-checks identities built from it:

- `Σ_{t² < p} H_w(t² - p) = (p - 2)/3` for every prime `p`
    (`xclassnum.identities.check_theorem1`).
- `Σ_{t² < 4p} H_w(t² - 4p) = 2p` (`xclassnum.identities.check_classical`).
- The Montgomery-curve trace census `|S_M(p, t)| = 3(p - 1)·H_w((t² - 4p)/4)`, and the
    intermediate steps that turn it into the first identity
    (`check_lemma1`, `check_mass_formula`, `check_reindex`, `check_vanishing`).

Nothing in here uses floating point. Class numbers are `xclassnum.exactmath.Twelfth` values
(integers over the fixed denominator 12), so every comparison is an integer comparison.

### Quick Start

>>> from xclassnum import hurwitz_class_number, check_theorem1
>>> str(hurwitz_class_number(-4))
'1/2'
>>> check_theorem1(5).passed
True

Index of the main pieces:

- `xclassnum.exactmath`: `Twelfth`, `is_prime`, `legendre_symbol`, `square_divisors`.
- `xclassnum.qforms`: `QuadForm`, `class_number`, `weighted_class_number` (`h_w`), and
    `HwOptions` to inject the `h_w` convention.
- `xclassnum.hurwitz`: `hurwitz_class_number` (`H_w`) and the per-thread `HurwitzCache`.
- `xclassnum.montgomery`: `CurveParams`, `point_count`, `trace_census`,
    `predicted_census_count`.
- `xclassnum.identities`: the `check_*` verifiers returning `IdentityReport`.
- `xclassnum.cli`: the `xclassnum` command (`verify theorem1 --first-n-primes 10000`, ...).

### Conventions

`h_w(d)` is zero for `d ≡ 2, 3 (mod 4)` and for `d >= 0`. `H_w(0) = -1/12` and
`H_w(Δ) = 0` for `Δ > 0`; those two values never enter a sum over `t² < p` for prime `p`.

Class numbers are integers but `H_w` isn't: `H_w(-3) = 1/3` and `H_w(-4) = 1/2`, which is
why `(p - 2)/3` can be fractional.
"""
from .errors import (
    XClassnumError, ContractError, SingularCurveError, IdentityInvariantError, RunConfigError
)
from .exactmath import Twelfth, Factorization, is_prime, legendre_symbol, square_divisors
from .qforms import (
    QuadForm, HwConvention, HwOptions, class_number, weighted_class_number, reduced_forms
)
from .hurwitz import HurwitzCache, hurwitz_class_number
from .montgomery import (
    CurveParams, TraceCensus, character_sum, point_count, trace_census, predicted_census_count
)
from .identities import (
    IdentityKind,
    IdentityReport,
    theorem1_sum,
    check_theorem1,
    check_classical,
    check_lemma1,
    check_mass_formula,
    check_reindex,
    check_vanishing,
)

__all__ = [
    "XClassnumError",
    "ContractError",
    "SingularCurveError",
    "IdentityInvariantError",
    "RunConfigError",
    "Twelfth",
    "Factorization",
    "is_prime",
    "legendre_symbol",
    "square_divisors",
    "QuadForm",
    "HwConvention",
    "HwOptions",
    "class_number",
    "weighted_class_number",
    "reduced_forms",
    "HurwitzCache",
    "hurwitz_class_number",
    "CurveParams",
    "TraceCensus",
    "character_sum",
    "point_count",
    "trace_census",
    "predicted_census_count",
    "IdentityKind",
    "IdentityReport",
    "theorem1_sum",
    "check_theorem1",
    "check_classical",
    "check_lemma1",
    "check_mass_formula",
    "check_reindex",
    "check_vanishing",
]
