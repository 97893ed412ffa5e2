"""qcert: exact distinct-partition counts, certified asymptotics, and
machine-verified Turan/Laguerre-type inequalities.

The package has three layers:

* exact integers: ``qtable`` computes q(n) (partitions into distinct
  parts) by big-integer dynamic programming;
* certified numerics: ``intervals``/``enclosures`` provide dyadic
  interval arithmetic with outward rounding, ``ring``/``coeffs`` the
  exact expansion coefficients in Q[pi^±1, sqrt3], and ``bounds`` the
  fully explicit two-sided envelopes for q(n+s);
* verification: ``certify`` proves the eight inequality theorems by
  combining a polynomial positivity certifier with exact finite scans.
"""

from .bounds import (
    BoundPoly,
    ErrorBudget,
    SandwichResult,
    bessel_arg,
    bessel_main_term,
    bound_poly,
    bound_value,
    check_main_term_sandwich,
    decay_threshold,
    error_budget,
    n_min,
    prefactor,
    window_max,
)
from .certify import (
    INEQUALITIES,
    THEOREMS,
    Certificate,
    IneqPoly,
    TheoremSpec,
    VerificationReport,
    build_ineq,
    certify_inequality,
    certify_positive,
    exact_verify,
    find_crossover,
    invariant_a,
    invariant_b,
    invariant_i,
    laguerre,
    sharpness_scan,
    theorem_predicate,
    verify_theorem,
)
from .coeffs import (
    bessel_asym_coeff,
    binom_factor_coeff,
    eval_coeff,
    exp_binom_coeff,
    exp_factor_coeff,
    expansion_coeff,
    bessel_factor_coeff,
    gen_binomial,
    rising_factorial,
    shift_sigma,
)
from .enclosures import (
    enclose_bessel_i1,
    enclose_cosh,
    enclose_exp,
    enclose_log,
    enclose_pi,
    enclose_sinh,
    enclose_sqrt,
)
from .intervals import (
    DEFAULT_PRECISION,
    DomainError,
    Dyadic,
    Interval,
    get_precision,
    workprec,
)
from .qtable import (
    QTable,
    check_log_concavity,
    check_turan3,
    compute_q_table,
    compute_q_table_odd_parts,
    compute_q_table_packed,
    load_or_build,
    load_q_table,
    q_enumerate,
    save_q_table,
)
from .ring import RingElem, ring_eval

__version__ = "1.0.0"
