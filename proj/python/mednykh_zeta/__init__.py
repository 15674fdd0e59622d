"""Character tables, zeta functions and surface-group counts for GL(2,F_q) and PGL(2,F_q).

Exact results come back from the extension as "num/den" strings; the wrappers
here turn them into fractions.Fraction.
"""

from fractions import Fraction

from . import _core
from ._core import CapExceeded, ConsistencyError, UsageError, character_table, run_cli, verify, zeta_complex

__version__ = _core.__version__

__all__ = [
    "CapExceeded",
    "ConsistencyError",
    "UsageError",
    "character_table",
    "hom_count",
    "oracle_hom_count",
    "quotient_count",
    "run_cli",
    "verify",
    "zeta",
    "zeta_closed",
    "zeta_complex",
    "zeta_double",
    "zeta_fs",
    "zeta_insert",
]


def zeta(group: str, q: int, s: int) -> Fraction:
    return Fraction(_core.zeta(group, q, s))


def zeta_closed(group: str, q: int, s: int) -> Fraction:
    return Fraction(_core.zeta_closed(group, q, s))


def zeta_insert(group: str, q: int, insert: list[str], s: int) -> Fraction:
    return Fraction(_core.zeta_insert(group, q, insert, s))


def zeta_fs(group: str, q: int, indicator: int, s: int) -> Fraction:
    return Fraction(_core.zeta_fs(group, q, indicator, s))


def zeta_double(q: int, s: int) -> Fraction:
    return Fraction(_core.zeta_double(q, s))


def hom_count(group: str, q: int, genus: int, orientable: bool = True, insert: list[str] | None = None) -> int:
    return int(Fraction(_core.hom_count(group, q, genus, orientable, insert or [])))


def quotient_count(q: int, genus: int, orientable: bool = True, insert: list[str] | None = None) -> int:
    return int(Fraction(_core.quotient_count(q, genus, orientable, insert or [])))


def oracle_hom_count(group: str, q: int, genus: int, orientable: bool = True, insert: list[str] | None = None) -> int:
    return int(Fraction(_core.oracle_hom_count(group, q, genus, orientable, insert or [])))
