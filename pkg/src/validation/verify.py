"""
Verification Suites — Lines on Hypersurfaces
--------------------------------------------

Cross-checks every method and identity the library implements:

    cross-method       all applicable methods agree on C_n
    parity             C_n is odd
    asymptotic-bound   log C_n <= (n-1) log(2n-2) + (n-2) log(2n-3)
    semifinal          binomial-transform form equals the closed form
    recursion-coeffs   printed recursion equals the theta-matrix form
    theta-inverse      theta * alpha block is the identity
    generating-function sum_k theta_{t,k} C_{k+2} = u_t
    catalan-paths      Pieri path count equals K_m
    length-sum         profile enumeration equals n!(n-1)!/(n-h)
    w-sum              composition weights match the one-pass table and
                       sum_h W_{n,h} equals its closed form
    zblock-brute-force lengths equal a full labeling count

Each suite raises VerificationError on the first failure; the runner
turns that into a failed SuiteResult so one failure does not stop the
rest.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import pandas as pd
from joblib import Parallel, delayed

from src.arithmetic.exact import catalan
from src.config import (
    ASYMPTOTIC_SLACK,
    BOMBIERI_ENUMERATION_MAX_N,
    BOMBIERI_MAX_N,
    resolve_workers,
)
from src.exceptions import DomainError, VerificationError
from src.methods import applicable_methods
from src.schubert.closed_form import schubert_cn, semifinal_cn
from src.schubert.pieri import catalan_path_count
from src.schubert.recursion import (
    TriMatrix,
    alpha_matrix,
    recursion_coeffs,
    recursion_coeffs_via_theta,
    theta_matrix,
    z_series_check,
)
from src.zblocks.compositions import composition_table, enumerate_h_special, w_sum_identity
from src.zblocks.lengths import (
    ZBlock,
    brute_force_profile_counts,
    feasible_profiles,
    weighted_length_sum,
    weighted_length_sum_enumerated,
    zblock_length,
)


logger = logging.getLogger(__name__)

BRUTE_FORCE_MAX_WIDTH = 4


# ---------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------

def parity_holds(value: int) -> bool:
    return value % 2 == 1


def asymptotic_bound_holds(n: int, value: int, slack: float = ASYMPTOTIC_SLACK) -> bool:
    """log C_n <= (n-1) log(2n-2) + (n-2) log(2n-3), up to slack."""
    bound = (n - 1) * math.log(2 * n - 2) + (n - 2) * math.log(2 * n - 3)
    return math.log(value) <= bound + slack


# ---------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------

def check_cross_method(max_n: int) -> int:
    checks = 0
    for n in range(2, max_n + 1):
        values = {m.name: m.compute(n) for m in applicable_methods(n)}
        if len(set(values.values())) != 1:
            raise VerificationError("cross-method", f"n={n}: {values}")
        checks += len(values)
    return checks


def check_parity(max_n: int) -> int:
    for n in range(2, max_n + 1):
        value = schubert_cn(n)
        if not parity_holds(value):
            raise VerificationError("parity", f"C_{n} = {value} is even")
    return max_n - 1


def check_asymptotic_bound(max_n: int) -> int:
    for n in range(2, max_n + 1):
        if not asymptotic_bound_holds(n, schubert_cn(n)):
            raise VerificationError("asymptotic-bound", f"C_{n} exceeds the bound")
    return max_n - 1


def check_semifinal(max_n: int) -> int:
    for n in range(2, max_n + 1):
        if semifinal_cn(n) != schubert_cn(n):
            raise VerificationError("semifinal", f"n={n}")
    return max_n - 1


def check_recursion_coeffs(max_n: int) -> int:
    for n in range(3, max_n + 1):
        printed, _ = recursion_coeffs(n)
        via_theta = recursion_coeffs_via_theta(n)
        if printed != via_theta:
            raise VerificationError("recursion-coeffs", f"n={n}: {printed} vs {via_theta}")
    return max(max_n - 2, 0)


def check_theta_inverse(max_n: int) -> int:
    size = max_n - 1
    product = theta_matrix(size).matmul(alpha_matrix(size))
    if product != TriMatrix.identity(size):
        raise VerificationError("theta-inverse", f"theta * alpha differs from the identity at size {size}")
    return size * (size + 1) // 2


def check_generating_function(max_n: int) -> int:
    return len(z_series_check(max_n - 1))


def check_catalan_paths(max_n: int) -> int:
    checks = 0
    for n in range(2, max_n + 1):
        for m in range(n):
            if catalan_path_count(n, m) != catalan(m):
                raise VerificationError("catalan-paths", f"n={n}, m={m}")
            checks += 1
    return checks


def check_length_sum(max_n: int) -> int:
    checks = 0
    for n in range(2, min(max_n, BOMBIERI_ENUMERATION_MAX_N) + 1):
        for h in range(1, n):
            enumerated = weighted_length_sum_enumerated(n, h)
            if enumerated != weighted_length_sum(n, h):
                raise VerificationError("length-sum", f"n={n}, h={h}: enumerated {enumerated}")
            checks += 1
    return checks


def check_w_sum(max_n: int) -> int:
    checks = 0
    for n in range(2, min(max_n, BOMBIERI_ENUMERATION_MAX_N) + 1):
        table = composition_table(n)
        for h in range(1, n):
            comps = list(enumerate_h_special(n, h))
            observed = (len(comps), sum(c.weight() for c in comps))
            if observed != table[h]:
                raise VerificationError("w-sum", f"n={n}, h={h}: enumerated {observed} vs table {table[h]}")
            checks += 1
    for n in range(3, min(max_n, BOMBIERI_MAX_N) + 1):
        lhs, rhs = w_sum_identity(n)
        if lhs != rhs:
            raise VerificationError("w-sum", f"n={n}: {lhs} vs {rhs}")
        checks += 1
    return checks


def check_zblock_brute_force(max_n: int, max_width: int = BRUTE_FORCE_MAX_WIDTH) -> int:
    checks = 0
    for width in range(min(max_n, max_width) + 1):
        for bulk in range(width + 1):
            block = ZBlock(width, bulk)
            observed = brute_force_profile_counts(block)
            expected = {p.counts: zblock_length(block, p) for p in feasible_profiles(block)}
            if observed != expected:
                raise VerificationError("zblock-brute-force", f"block ({width}, {bulk}): {observed} vs {expected}")
            checks += 1
    return checks


SUITES: dict[str, Callable[[int], int]] = {
    "cross-method":        check_cross_method,
    "parity":              check_parity,
    "asymptotic-bound":    check_asymptotic_bound,
    "semifinal":           check_semifinal,
    "recursion-coeffs":    check_recursion_coeffs,
    "theta-inverse":       check_theta_inverse,
    "generating-function": check_generating_function,
    "catalan-paths":       check_catalan_paths,
    "length-sum":          check_length_sum,
    "w-sum":               check_w_sum,
    "zblock-brute-force":  check_zblock_brute_force,
}


# ---------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checks: int
    detail: str = ""

    def to_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checks": self.checks, "detail": self.detail}


def run_suite(name: str, max_n: int) -> SuiteResult:
    try:
        checks = SUITES[name](max_n)
    except VerificationError as exc:
        return SuiteResult(name=name, passed=False, checks=0, detail=exc.detail or str(exc))
    return SuiteResult(name=name, passed=True, checks=checks)


def run_verification(max_n: int, workers: Optional[int] = None) -> list[SuiteResult]:
    """Run every suite up to max_n; results keep the SUITES order."""
    if max_n < 2:
        raise DomainError(f"verify needs max_n >= 2, got {max_n}")

    workers = resolve_workers() if workers is None else workers
    logger.info(f"[VERIFY] {len(SUITES)} suites up to n={max_n} (workers={workers})")

    results = Parallel(n_jobs=workers)(delayed(run_suite)(name, max_n) for name in SUITES)

    for r in results:
        if r.passed:
            logger.info(f"[OK] {r.name} ({r.checks} checks)")
        else:
            logger.error(f"[FAIL] {r.name}: {r.detail}")
    return results


def summary_frame(results: list[SuiteResult]) -> pd.DataFrame:
    frame = pd.DataFrame([r.to_dict() for r in results], columns=["suite", "passed", "checks", "detail"])
    frame["status"] = frame["passed"].map({True: "PASS", False: "FAIL"})
    return frame[["suite", "status", "checks", "detail"]]
