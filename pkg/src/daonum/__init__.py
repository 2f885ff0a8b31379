"""Dao numbers of monomial ideals: exact d1 = d3, seeded d2, bounds and Betti tables."""

__version__ = "0.1.0"

from .betti import (
    QQ,
    BettiTable,
    FieldConfig,
    is_componentwise_linear,
    koszul_betti_oracle,
    multigraded_betti,
    regularity,
)
from .bounds import (
    all_bounds,
    ci_dao_closed_form,
    degree_sum_bound,
    equigenerated_reg_bound,
    lin_quot_bound,
    multidegree_bound,
)
from .dao import (
    d2_randomized,
    d3_exact,
    dao_module_component,
    is_full_randomized,
    is_m_full_randomized,
    is_weakly_m_full,
)
from .errors import (
    BudgetExceededError,
    CapExceededError,
    ContextMismatchError,
    DaoError,
    ParseError,
    ProperIdealError,
)
from .ideal import MonomialIdeal, Ring, maximal_ideal, m_power
from .io import dumps_ideal, parse_ideal
from .limits import limits
from .orders import GeneratorOrder, lambda_profile, lift_order
from .report import ReportConfig, run_report

__all__ = [name for name in dir() if not name.startswith("_")]
