"""Shared cached enumerations so the suite never rebuilds a family twice."""

from functools import lru_cache

from asmdpp.asm import Asm, asm_stats, enumerate_asms
from asmdpp.dpp import dpp_stats, enumerate_dpps


@lru_cache(maxsize=None)
def asm_list(n: int) -> tuple:
    return tuple(enumerate_asms(n))


@lru_cache(maxsize=None)
def dpp_list(n: int) -> tuple:
    return tuple(enumerate_dpps(n))


@lru_cache(maxsize=None)
def asm_triples(n: int) -> tuple:
    return tuple((s.nu, s.mu, s.rho) for s in map(asm_stats, asm_list(n)))


@lru_cache(maxsize=None)
def dpp_triples(n: int) -> tuple:
    return tuple(
        (s.nu, s.mu, s.rho) for s in (dpp_stats(d, n) for d in dpp_list(n))
    )


def cells(triples) -> dict:
    out: dict = {}
    for t in triples:
        out[t] = out.get(t, 0) + 1
    return out


ASMEX = Asm(
    (
        (0, 0, 0, 1, 0, 0),
        (0, 1, 0, -1, 1, 0),
        (1, -1, 1, 0, 0, 0),
        (0, 0, 0, 1, 0, 0),
        (0, 1, 0, -1, 0, 1),
        (0, 0, 0, 1, 0, 0),
    )
)
