"""Property Q: matching odd jumps to even jumps so each pair spans a connected 4-regular circulant."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import HalfJumpPresent, NoValidPairing, PairingMismatch, UnbalancedJumps
from .graph_core import CirculantSpec


@dataclass(frozen=True)
class JumpPairing:
    pairs: tuple[tuple[int, int], ...]  # (odd_jump, even_jump)

    def to_json(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs]}


def admissible(n: int, odd: int, even: int) -> bool:
    if gcd(gcd(n, odd), even) != 1:
        return False
    if (2 * odd) % n == 0 or (2 * even) % n == 0:
        return False
    return (odd - even) % n != 0 and (odd + even) % n != 0


def _max_matching(left: list[int], adj: dict[int, list[int]]) -> int:
    match: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match or augment(match[v], seen):
                match[v] = u
                return True
        return False

    return sum(augment(u, set()) for u in left)


def check_property_q(spec: CirculantSpec) -> JumpPairing:
    """Lexicographically smallest perfect odd-even jump matching.

    Odd jumps are taken in increasing order, each given the smallest even
    jump that still leaves a perfect matching for the rest.
    """
    n = spec.n
    if spec.has_half_jump():
        raise HalfJumpPresent(f"jump {n // 2} = n/2 present in Circ({n}, {list(spec.jumps)})")
    odds = [j for j in spec.jumps if j % 2]
    evens = [j for j in spec.jumps if j % 2 == 0]
    if len(odds) != len(evens):
        raise UnbalancedJumps(f"{len(odds)} odd vs {len(evens)} even jumps")
    adj = {o: [e for e in evens if admissible(n, o, e)] for o in odds}

    pairs = []
    free_odds, free_evens = list(odds), set(evens)
    while free_odds:
        o = free_odds.pop(0)
        for e in adj[o]:
            if e not in free_evens:
                continue
            rest = {u: [v for v in adj[u] if v in free_evens and v != e] for u in free_odds}
            if _max_matching(free_odds, rest) == len(free_odds):
                pairs.append((o, e))
                free_evens.remove(e)
                break
        else:
            raise NoValidPairing(f"no perfect odd-even pairing for Circ({n}, {list(spec.jumps)})")
    return JumpPairing(tuple(pairs))


def split_by_pairing(spec: CirculantSpec, pairing: JumpPairing) -> list[CirculantSpec]:
    used = sorted(j for p in pairing.pairs for j in p)
    if used != sorted(spec.jumps):
        raise PairingMismatch(f"pairing covers {used}, spec has {list(spec.jumps)}")
    for o, e in pairing.pairs:
        if o % 2 == 0 or e % 2 or not admissible(spec.n, o, e):
            raise PairingMismatch(f"pair ({o}, {e}) is not an admissible odd-even pair")
    return [CirculantSpec.of(spec.n, p) for p in pairing.pairs]


def admissible_pairs(n: int) -> list[tuple[int, int]]:
    """Ordered opposite-parity jump pairs (a, b) giving a connected 4-regular Circ(n, {a, b})."""
    return [
        (a, b)
        for a in range(1, (n + 1) // 2)
        for b in range(1, (n + 1) // 2)
        if (a - b) % 2 and admissible(n, a, b)
    ]
