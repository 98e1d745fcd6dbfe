"""
Method Registry — Lines on Hypersurfaces
----------------------------------------

Every independent way of computing C_n, with the range of n it accepts.
The CLI and the verification suites look methods up here.
"""

from dataclasses import dataclass
from typing import Callable, Optional

from src.config import BOMBIERI_MAX_N, ORACLE_MAX_N
from src.exceptions import CapacityError, DomainError
from src.formulas.classical import dominici_cn, harris_cn, libgober_cn, zagier_product_cn, zagier_stirling_cn
from src.oracle.bllp import bllp_cn
from src.schubert.closed_form import schubert_cn
from src.schubert.recursion import cn_via_recursion
from src.zblocks.bombieri import bombieri_cn


@dataclass(frozen=True)
class Method:
    name: str
    compute: Callable[[int], int]
    min_n: int
    max_n: Optional[int] = None

    def accepts(self, n: int) -> bool:
        return n >= self.min_n and (self.max_n is None or n <= self.max_n)

    def check(self, n: int) -> None:
        """Raise the error a call outside the range would produce."""
        if n < self.min_n:
            raise DomainError(f"{self.name} requires n >= {self.min_n}, got n={n}")
        if self.max_n is not None and n > self.max_n:
            raise CapacityError(f"{self.name} is capped at n <= {self.max_n}, got n={n}")


METHODS: dict[str, Method] = {
    m.name: m for m in (
        Method("zagier-product",  zagier_product_cn,  2),
        Method("zagier-stirling", zagier_stirling_cn, 2),
        Method("libgober",        libgober_cn,        3),
        Method("dominici",        dominici_cn,        3),
        Method("harris",          harris_cn,          3),
        Method("schubert",        schubert_cn,        2),
        Method("recursion",       cn_via_recursion,   2),
        Method("bombieri",        bombieri_cn,        2, BOMBIERI_MAX_N),
        Method("oracle",          bllp_cn,            2, ORACLE_MAX_N),
    )
}

ALL = "all"
METHOD_CHOICES = [*METHODS, ALL]


def get_method(name: str) -> Method:
    try:
        return METHODS[name]
    except KeyError:
        raise DomainError(f"Unknown method {name!r}; choose from {', '.join(METHOD_CHOICES)}") from None


def compute_lines(n: int, method: str) -> int:
    m = get_method(method)
    m.check(n)
    return m.compute(n)


def applicable_methods(n: int) -> list[Method]:
    return [m for m in METHODS.values() if m.accepts(n)]
