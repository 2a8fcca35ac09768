"""Riemann and Hurwitz zeta functions, completed xi and the phi building block"""

from hurwitzlommel.zeta.hurwitz import (
    hurwitz_zeta_em,
    hurwitz_zeta_hermite,
    hurwitz_rhs_fourier,
    hurwitz_from_befmas_closed,
)

from hurwitzlommel.zeta.riemann import (
    riemann_zeta,
    functional_equation_rhs,
    xi_completed,
    xi_capital,
)

from hurwitzlommel.zeta.phi import PhiRoute, phi, phi_lattice_sum

__all__ = [
    # Hurwitz zeta
    "hurwitz_zeta_em",
    "hurwitz_zeta_hermite",
    "hurwitz_rhs_fourier",
    "hurwitz_from_befmas_closed",
    # Riemann zeta
    "riemann_zeta",
    "functional_equation_rhs",
    "xi_completed",
    "xi_capital",
    # phi
    "PhiRoute",
    "phi",
    "phi_lattice_sum",
]
