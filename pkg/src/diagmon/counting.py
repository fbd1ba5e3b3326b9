"""Idempotent counting: c-values, totals, per-rank and per-R-class counts.

Every count is an exact Python int.  Most quantities can be computed along
two or three independent routes (sum over integer partitions, recurrence,
closed form); the routes are deliberately kept separate, memoized under
distinct keys, so they can be played against each other by the verifier.

All results are cached in the module-level _MEMO dict, keyed by
(kind, family, indices..., method).  Filling a memo entry is idempotent and
each fill is a single dict write, so concurrent readers under the GIL are
safe; there is no invalidation.  cache_save / cache_load persist the dict
as JSON with decimal-string values.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .combinat import (
    IntegerPartitionSpec,
    bell,
    e_nrs,
    integer_partitions,
    involutions,
    odd_double_factorial,
    pi_count,
)
from .core import MonoidFamily
from .errors import DomainError, ParityError
from .idempotency import TwistOrder

_MEMO: dict[tuple, int] = {}


@dataclass(frozen=True)
class CountTable:
    """A finished grid of counts, ready for rendering or comparison.

    entries maps index tuples (e.g. (n,) or (n, r)) to exact values; every
    index in the declared ranges is present.
    """

    kind: str
    family: str
    method: str
    index_names: tuple[str, ...]
    entries: dict[tuple[int, ...], int] = field(compare=True)


def _fam(f: MonoidFamily | str) -> MonoidFamily:
    if isinstance(f, MonoidFamily):
        return f
    try:
        return MonoidFamily(f)
    except ValueError:
        raise DomainError(f"unknown family {f!r}") from None


def _twist(t: TwistOrder | int) -> TwistOrder:
    return t if isinstance(t, TwistOrder) else TwistOrder(t)


# --------------------------------------------------------------------------
# polynomials with int coefficients, as plain lists (index = degree)

def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_pow(a: list[int], k: int) -> list[int]:
    out = [1]
    for _ in range(k):
        out = _poly_mul(out, a)
    return out


def _rank_poly(f: MonoidFamily, spec: IntegerPartitionSpec) -> list[int]:
    """Product over the parts of (c0 + c1·x), one factor per part.

    Coefficient r is the number of ways to give the parts irreducible
    fillings with total rank r.
    """
    poly = [1]
    for i, mult in enumerate(spec.parts):
        if mult:
            c0, c1, _ = c_values(f, i + 1)
            poly = _poly_mul(poly, _poly_pow([c0, c1], mult))
    return poly


# --------------------------------------------------------------------------
# c-values: irreducible idempotent counts by rank (0 or 1) per family

def c_values(f: MonoidFamily | str, n: int) -> tuple[int, int, int]:
    """(c0, c1, c0 + c1): irreducible idempotents on n points of rank 0 and 1."""
    fam = _fam(f)
    if n < 1:
        raise DomainError(f"c-values need n >= 1, got {n}")
    key0 = ("c0", fam.value, n)
    hit = _MEMO.get(key0)
    if hit is not None:
        c1 = _MEMO[("c1", fam.value, n)]
        return hit, c1, hit + c1
    if fam is MonoidFamily.P:
        c0 = sum(e_nrs(n, r, s) for r in range(1, n + 1) for s in range(1, n + 1))
        c1 = sum(
            r * s * e_nrs(n, r, s) for r in range(1, n + 1) for s in range(1, n + 1)
        )
    elif fam is MonoidFamily.B:
        c0, c1 = ((math.factorial(n - 1), 0) if n % 2 == 0 else (0, math.factorial(n)))
    elif fam is MonoidFamily.PB:
        if n % 2 == 0:
            c0, c1 = (n + 1) * math.factorial(n - 1), 0
        else:
            c0, c1 = math.factorial(n), math.factorial(n)
    elif fam is MonoidFamily.T:
        c0, c1 = 0, n
    elif fam is MonoidFamily.I:
        c0, c1 = (1, 1) if n == 1 else (0, 0)
    elif fam is MonoidFamily.IDUAL:
        c0, c1 = 0, 1
    else:  # pragma: no cover - the enum is closed
        raise DomainError(f"unknown family {fam!r}")
    _MEMO[key0] = c0
    _MEMO[("c1", fam.value, n)] = c1
    return c0, c1, c0 + c1


# --------------------------------------------------------------------------
# total idempotent counts

def e_total(f: MonoidFamily | str, n: int, method: str = "recurrence") -> int:
    """Number of idempotents in the family's monoid on n strands."""
    fam = _fam(f)
    if n < 0:
        raise DomainError(f"e_total needs n >= 0, got {n}")
    if method not in ("formula", "recurrence"):
        raise DomainError(f"unknown e_total method {method!r}")
    key = ("e_total", fam.value, n, method)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    if method == "formula":
        total = 0
        for spec in integer_partitions(n):
            prod = 1
            for i, mult in enumerate(spec.parts):
                if mult:
                    prod *= c_values(fam, i + 1)[2] ** mult
            total += pi_count(spec) * prod
    else:
        if n == 0:
            total = 1
        else:
            total = sum(
                math.comb(n - 1, m - 1)
                * c_values(fam, m)[2]
                * e_total(fam, n - m, "recurrence")
                for m in range(1, n + 1)
            )
    _MEMO[key] = total
    return total


# --------------------------------------------------------------------------
# per-rank idempotent counts

def e_rank(f: MonoidFamily | str, n: int, r: int, method: str = "recurrence") -> int:
    """Number of idempotents of rank exactly r."""
    fam = _fam(f)
    if n < 0 or not 0 <= r <= n:
        raise DomainError(f"e_rank needs 0 <= r <= n, got n={n} r={r}")
    if method == "mu_sum":
        key = ("e_rank", fam.value, n, r, "mu_sum")
        hit = _MEMO.get(key)
        if hit is None:
            hit = _MEMO[key] = _e_rank_mu(fam, n, r)
        return hit
    if method == "recurrence":
        return _e_rank_rec(fam, n, r)
    if method == "closed":
        if fam is MonoidFamily.B:
            return _e_rank_closed_b(n, r)
        if fam is MonoidFamily.PB:
            return _e_rank_closed_pb(n, r)
        raise DomainError(f"no closed per-rank form for family {fam.value}")
    raise DomainError(f"unknown e_rank method {method!r}")


def _e_rank_mu(fam: MonoidFamily, n: int, r: int) -> int:
    total = 0
    for spec in integer_partitions(n):
        poly = _rank_poly(fam, spec)
        if r < len(poly) and poly[r]:
            total += pi_count(spec) * poly[r]
    return total


def _rank0_rclass_count(fam: MonoidFamily, n: int) -> int:
    """Number of R-classes of rank 0, i.e. of possible upper halves."""
    if n == 0:
        return 1
    if fam is MonoidFamily.P:
        return bell(n)
    if fam is MonoidFamily.B:
        return odd_double_factorial(n - 1) if n % 2 == 0 else 0
    if fam is MonoidFamily.PB:
        return involutions(n)
    if fam is MonoidFamily.I:
        return 1
    # T forces a full upper domain and Idual full domains on both sides,
    # so neither contains a rank-0 element once n >= 1
    return 0


def _e_rank_rec(fam: MonoidFamily, n: int, r: int) -> int:
    if r < 0 or r > n:
        return 0
    if n == 0 or r == n:
        return 1
    if r == 0:
        return _rank0_rclass_count(fam, n) ** 2
    key = ("e_rank", fam.value, n, r, "recurrence")
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    total = 0
    for m in range(1, n + 1):
        c0, c1, _ = c_values(fam, m)
        total += math.comb(n - 1, m - 1) * (
            c0 * _e_rank_rec(fam, n - m, r) + c1 * _e_rank_rec(fam, n - m, r - 1)
        )
    _MEMO[key] = total
    return total


def _odd_part_count(spec: IntegerPartitionSpec) -> int:
    return sum(m for i, m in enumerate(spec.parts) if i % 2 == 0)


def _e_rank_closed_b(n: int, r: int) -> int:
    total = 0
    nf = math.factorial(n)
    for spec in integer_partitions(n):
        if _odd_part_count(spec) != r:
            continue
        den = 1
        for i, mult in enumerate(spec.parts):
            if mult:
                den *= math.factorial(mult)
                if i % 2 == 1:  # the part i+1 is even
                    den *= (i + 1) ** mult
        q, rem = divmod(nf, den)
        assert rem == 0
        total += q
    return total


def _e_rank_closed_pb(n: int, r: int) -> int:
    total = 0
    nf = math.factorial(n)
    for spec in integer_partitions(n):
        odd = _odd_part_count(spec)
        if odd < r:
            continue
        num = nf * math.comb(odd, r)
        den = 1
        for i, mult in enumerate(spec.parts):
            if mult:
                den *= math.factorial(mult)
                if i % 2 == 1:
                    num *= (i + 2) ** mult  # even part 2j: weight (2j+1)^mult
                    den *= (i + 1) ** mult
        q, rem = divmod(num, den)
        assert rem == 0
        total += q
    return total


# --------------------------------------------------------------------------
# R-class-count prefactors

def rho(
    f: MonoidFamily | str,
    n: int,
    r: int | None = None,
    t: int | None = None,
) -> int:
    """Number of R-classes: of rank 0 when r is absent; of the rank-r
    D-class of the Brauer monoid when r is given; of the (r, t) stratum of
    the partial Brauer monoid when both r and t are given.
    """
    fam = _fam(f)
    if n < 0:
        raise DomainError(f"rho needs n >= 0, got {n}")
    if r is None:
        if t is not None:
            raise DomainError("rho with t requires r")
        if fam is MonoidFamily.P:
            return bell(n)
        if fam is MonoidFamily.B:
            if n % 2:
                return 0
            return odd_double_factorial(n - 1)
        if fam is MonoidFamily.PB:
            return involutions(n)
        raise DomainError(f"rank-0 R-class count not defined for {fam.value}")
    if not 0 <= r <= n:
        raise DomainError(f"rho needs 0 <= r <= n, got n={n} r={r}")
    if t is None:
        if fam is not MonoidFamily.B:
            raise DomainError(f"rho(n, r) applies to family B, not {fam.value}")
        if (n - r) % 2:
            raise ParityError(f"n - r must be even, got n={n} r={r}")
        k = (n - r) // 2
        return math.comb(n, r) * odd_double_factorial(2 * k - 1)
    if fam is not MonoidFamily.PB:
        raise DomainError(f"rho(n, r, t) applies to family PB, not {fam.value}")
    if t < 0 or r + t > n:
        raise DomainError(f"rho needs t >= 0 and r + t <= n, got n={n} r={r} t={t}")
    if (n - r - t) % 2:
        raise ParityError(f"n - r - t must be even, got n={n} r={r} t={t}")
    k = (n - r - t) // 2
    return math.comb(n, r) * math.comb(n - r, t) * odd_double_factorial(2 * k - 1)


# --------------------------------------------------------------------------
# per-R-class idempotent counts

def a_nr(n: int, r: int) -> int:
    """Idempotents in one R-class of the rank-r D-class of the Brauer monoid."""
    if n < 0 or r < 0 or r > n or (n - r) % 2:
        raise ParityError(f"need 0 <= r <= n with n = r (mod 2), got n={n} r={r}")
    key = ("a_nr", "B", n, r)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    if r == n:
        value = 1
    elif r == 0:
        value = odd_double_factorial(n - 1)
    else:
        value = a_nr(n - 1, r - 1) + (n - r) * a_nr(n - 2, r)
    _MEMO[key] = value
    return value


def a_nrt(n: int, r: int, t: int) -> int:
    """Idempotents in one R-class of the partial Brauer monoid, indexed by
    rank r and the number t of idle points in the class's upper half."""
    if n < 0 or r < 0 or t < 0 or r + t > n or (n - r - t) % 2:
        raise ParityError(
            f"need r, t >= 0 and r + t <= n with n = r + t (mod 2), got n={n} r={r} t={t}"
        )
    key = ("a_nrt", "PB", n, r, t)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    if r == n:
        value = 1
    elif r == 0:
        value = involutions(n)
    else:
        value = a_nrt(n - 1, r - 1, t)
        slack = n - r - t
        if slack > 0:
            value += slack * a_nrt(n - 2, r, t)
    _MEMO[key] = value
    return value


def b_nr(n: int, r: int) -> int:
    """Twisted (no finite order) idempotents in one Brauer R-class of rank r."""
    if n < 0 or r < 0 or r > n or (n - r) % 2:
        raise ParityError(f"need 0 <= r <= n with n = r (mod 2), got n={n} r={r}")
    key = ("b_nr", "B", n, r)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    if r == n:
        value = 1
    elif r == 0:
        value = 0 if n >= 2 else 1
    else:
        value = b_nr(n - 1, r - 1) + (n - r) * b_nr(n - 2, r)
    _MEMO[key] = value
    return value


# --------------------------------------------------------------------------
# twisted-algebra counts

def exi_total(
    f: MonoidFamily | str,
    n: int,
    t: TwistOrder | int = 0,
    method: str = "formula",
) -> int:
    """Number of twisted idempotents for the given twist order.

    The recurrence route exists only for order 0; any positive order goes
    through the partition formula (order 1 collapses to the plain count).
    """
    fam = _fam(f)
    order = _twist(t)
    if n < 0:
        raise DomainError(f"exi_total needs n >= 0, got {n}")
    if method not in ("formula", "recurrence"):
        raise DomainError(f"unknown exi_total method {method!r}")
    if method == "recurrence" and order.M != 0:
        raise DomainError("the twisted recurrence applies to order 0 only")
    key = ("exi_total", fam.value, n, order.M, method)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    if method == "recurrence":
        if n == 0:
            total = 1
        else:
            total = sum(
                math.comb(n - 1, m - 1)
                * c_values(fam, m)[1]
                * exi_total(fam, n - m, order, "recurrence")
                for m in range(1, n + 1)
            )
    elif order.M == 0:
        total = 0
        for spec in integer_partitions(n):
            prod = 1
            for i, mult in enumerate(spec.parts):
                if mult:
                    prod *= c_values(fam, i + 1)[1] ** mult
            total += pi_count(spec) * prod
    else:
        total = 0
        for spec in integer_partitions(n):
            k = sum(spec.parts)
            poly = _rank_poly(fam, spec)
            picked = sum(
                coef for rr, coef in enumerate(poly) if (rr - k) % order.M == 0
            )
            total += pi_count(spec) * picked
    _MEMO[key] = total
    return total


def exi_rank(
    f: MonoidFamily | str, n: int, r: int, t: TwistOrder | int = 0
) -> int:
    """Twisted idempotents of rank exactly r, for twist order 0."""
    fam = _fam(f)
    order = _twist(t)
    if order.M != 0:
        raise DomainError("per-rank twisted counts are exposed for order 0 only")
    if n < 0 or not 0 <= r <= n:
        raise DomainError(f"exi_rank needs 0 <= r <= n, got n={n} r={r}")
    return _exi_rank_rec(fam, n, r)


def _exi_rank_rec(fam: MonoidFamily, n: int, r: int) -> int:
    if r < 0 or r > n:
        return 0
    if n == 0:
        return 1
    key = ("exi_rank", fam.value, n, r, 0)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    total = sum(
        math.comb(n - 1, m - 1) * c_values(fam, m)[1] * _exi_rank_rec(fam, n - m, r - 1)
        for m in range(1, n + 1)
    )
    _MEMO[key] = total
    return total


# --------------------------------------------------------------------------
# derived helpers

def completely_regular_count(f: MonoidFamily | str, n: int) -> int:
    """Number of elements lying in a subgroup: r! per idempotent of rank r."""
    fam = _fam(f)
    if n < 0:
        raise DomainError(f"need n >= 0, got {n}")
    return sum(math.factorial(r) * e_rank(fam, n, r) for r in range(n + 1))


def ideal_idempotent_count(f: MonoidFamily | str, n: int, r: int) -> int:
    """Idempotents in the ideal of elements of rank at most r."""
    fam = _fam(f)
    if n < 0 or not 0 <= r <= n:
        raise DomainError(f"need 0 <= r <= n, got n={n} r={r}")
    return sum(e_rank(fam, n, s) for s in range(r + 1))


# --------------------------------------------------------------------------
# persisted cache

def cache_save(path: str | Path) -> int:
    """Write the memo dict as JSON (decimal-string values); returns entry count."""
    payload = {"|".join(map(str, key)): str(value) for key, value in _MEMO.items()}
    Path(path).write_text(json.dumps(payload, sort_keys=True))
    return len(payload)


def cache_load(path: str | Path) -> int:
    """Fill the memo dict from a cache_save file; returns entries loaded.

    A missing file loads nothing.  Results never depend on the cache, only
    speed does, so a stale or foreign file at worst wastes memory.
    """
    p = Path(path)
    if not p.exists():
        return 0
    payload = json.loads(p.read_text())
    loaded = 0
    for key_str, value in payload.items():
        parts = tuple(int(p) if p.lstrip("-").isdigit() else p for p in key_str.split("|"))
        _MEMO[parts] = int(value)
        loaded += 1
    return loaded
