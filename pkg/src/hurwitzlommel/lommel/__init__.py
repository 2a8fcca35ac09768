"""Lommel functions, their Dirichlet series and closed-form sums"""

from hurwitzlommel.lommel.functions import (
    LommelOrder,
    lommel_s_small,
    lommel_s,
    lommel_S,
    lommel_S_special,
    lommel_C,
    contiguous_step,
    lommel_S_asymptotic,
)

from hurwitzlommel.lommel.series import (
    DirichletWeights,
    DirichletSum,
    lommel_dirichlet_sum,
    small_lommel_dirichlet_sum,
    hurwitz_from_lommel,
    befmas_second_form,
)

from hurwitzlommel.lommel.masirevic import (
    MasirevicSum,
    masirevic_sum,
    masirevic_sum2,
    masi_closed_form,
    a1_closed_form,
    modilommel_closed_form,
    a1_contiguous_form,
)

__all__ = [
    # Functions
    "LommelOrder",
    "lommel_s_small",
    "lommel_s",
    "lommel_S",
    "lommel_S_special",
    "lommel_C",
    "contiguous_step",
    "lommel_S_asymptotic",
    # Dirichlet series
    "DirichletWeights",
    "DirichletSum",
    "lommel_dirichlet_sum",
    "small_lommel_dirichlet_sum",
    "hurwitz_from_lommel",
    "befmas_second_form",
    # Closed-form sums
    "MasirevicSum",
    "masirevic_sum",
    "masirevic_sum2",
    "masi_closed_form",
    "a1_closed_form",
    "modilommel_closed_form",
    "a1_contiguous_form",
]
