"""The default identity suite"""

import itertools
import math
from typing import Any, Dict, Optional

from hurwitzlommel.config.tolerances import DEFAULT_PROFILE, ToleranceProfile
from hurwitzlommel.verify.cases import IdentityCase, IdentityId

SQRT2 = math.sqrt(2.0)
TWO_PI = 2.0 * math.pi

LEMMA21_S = (-3.0, -1.4, -0.5, 0.5, 1.5, 2.7, -2 + 1.3j, 0.25 - 0.75j)
LEMMA21_A = (0.25, 1.0, SQRT2)
LEMMA21_K = (1, 2, 5)

HERMITE_POINTS = (
    (-2.5, 0.3), (-0.5, 0.25), (0.5, 1.0), (2.0, 1.0), (3.5 + 1j, 0.5),
    (-1.3 + 2j, 1.7), (0.7 - 0.4j, 2.5), (4.0, 0.1), (-4.5, 3.0), (1.5, 1 + 1j),
    (-0.5, 1 + 1j), (2.5 - 1j, 1 + 1j), (0.3, 0.75), (-3.2, 1.25), (6.0, 0.6),
    (1.01, 2.0), (0.99 + 0.5j, 0.4), (-1.5, 5.0), (3.0 + 4j, 1.0), (-0.25 - 3j, 0.8),
)

MELLIN_POINTS = (
    (-0.3, 0.5), (-0.7, 0.1), (-1.2, 0.8), (-1.5, 0.3), (-2.7, 0.95), (-2.9 + 0.5j, 0.6),
    (-0.5 + 1j, 0.25), (-1.8 - 0.4j, 0.7), (-2.2, 0.45), (-0.9, 0.9), (-1.35 + 0.25j, 0.15), (-2.5, 0.55),
)
# (s, z, c, c_alt); the second pair crosses the pole at xi = 1
MELLIN_CONTOURS = ((-0.3, 0.5, 0.5, 0.8), (-0.5, 0.7, 0.7, 1.6))


def _case(
    identity: IdentityId,
    params: Dict[str, Any],
    profile: ToleranceProfile,
    *,
    tol_abs: Optional[float] = None,
    tol_rel: Optional[float] = None,
) -> IdentityCase:
    return IdentityCase.create(identity, params, tol_abs=tol_abs, tol_rel=tol_rel, profile=profile)


def default_cases(include_stretch: bool = False, profile: ToleranceProfile = DEFAULT_PROFILE) -> list[IdentityCase]:
    """The acceptance grid; the Xi-integral cases only with ``include_stretch``"""
    cases: list[IdentityCase] = []

    for s, a, k in itertools.product(LEMMA21_S, LEMMA21_A, LEMMA21_K):
        cases.append(_case(IdentityId.LEMMA21, {"s": s, "a": a, "k": k}, profile))
    cases.append(_case(IdentityId.LEMMA21, {"s": 0.0, "a": 1.0, "k": 3}, profile))
    cases.append(_case(IdentityId.LEMMA21, {"s": 2 + 1j, "a": SQRT2, "k": 2}, profile))

    for s, a in ((-0.5, 1 / 3), (-2.3, 0.25), (-1.5 + 1j, 0.9)):
        cases.append(_case(IdentityId.HURWITZ_FORMULA, {"s": s, "a": a}, profile))
    cases.append(_case(IdentityId.HURWITZ_FORMULA, {"s": -2.0, "a": 1.0}, profile, tol_abs=1e-10))
    # conditionally convergent strip 0 <= Re(s) < 1
    for s, a in ((0.5, 0.9), (0.25, 0.25)):
        cases.append(_case(IdentityId.HURWITZ_FORMULA, {"s": s, "a": a}, profile, tol_rel=1e-6))

    for s in (-0.5, -2.5, -4.5):
        cases.append(_case(IdentityId.FUNCTIONAL_EQUATION, {"s": s}, profile))

    for s, a in HERMITE_POINTS:
        cases.append(_case(IdentityId.HERMITE_VS_EM, {"s": s, "a": a}, profile))

    for s, a in ((-1.5, 0.5), (2.5, 1.0), (1.3, SQRT2)):
        cases.append(_case(IdentityId.BEFMAS_EXPANSION, {"s": s, "a": a, "K": 2000}, profile))

    cases.append(_case(IdentityId.MASI_CLOSED_FORM, {"s": -2.0, "a": 1 / 3, "K": 5000}, profile))
    cases.append(_case(IdentityId.A1_CLOSED_FORM, {"s": -3.0, "K": 5000}, profile))
    cases.append(_case(IdentityId.MASIREVIC_T21, {"m": 0, "mu": 1.5, "nu": 0.5, "x": math.pi}, profile))
    cases.append(_case(IdentityId.MASIREVIC_T21, {"m": 1, "mu": 1.0, "nu": 0.5, "x": math.pi}, profile))
    # s = -3: both sides vanish, so the case is decided by tol_abs
    cases.append(_case(IdentityId.MASIREVIC_T22, {"m": 1, "mu": 2.0, "x": TWO_PI, "K": 5000}, profile, tol_abs=1e-9))

    for s, z in MELLIN_POINTS:
        cases.append(_case(IdentityId.MELLIN_TRIPLE, {"s": s, "z": z}, profile))
    for s, z, c, c_alt in MELLIN_CONTOURS:
        cases.append(_case(IdentityId.MELLIN_TRIPLE, {"s": s, "z": z, "c": c, "c_alt": c_alt}, profile, tol_rel=1e-9))

    for s, alpha in ((1.3, 2.0), (0.8, SQRT2), (1.5, 3.0)):
        cases.append(_case(IdentityId.MODULAR_COROLLARY, {"s": s, "alpha": alpha, "K": 5000}, profile))
    for s, alpha in ((1.5, 1.0), (1.2, 2.0)):
        cases.append(_case(IdentityId.THEOREM31_PHI_EQUALITY, {"s": s, "alpha": alpha, "N": 2000, "K": 5000}, profile))

    if include_stretch:
        cases.append(_case(IdentityId.THEOREM31_XI_INTEGRAL, {"s": 1.5, "alpha": 1.0}, profile))
        cases.append(_case(IdentityId.THEOREM31_XI_INTEGRAL, {"s": 1.2, "alpha": 2.0}, profile, tol_rel=1e-4))
    return cases
