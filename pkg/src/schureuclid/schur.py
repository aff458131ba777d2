"""Colorings of ``[1, n]``, monochromatic ``a + b = c`` triples, and exact
Schur numbers by backtracking.

Two triple conventions are supported.  ``STRONG`` allows ``a == b`` (the
classical Schur numbers 1, 4, 13, 44); ``WEAK`` requires ``a < b < c`` (the
weak Schur numbers 2, 8, 23, ...).
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Callable, Optional

from .errors import CapExceeded, CapRequired, HorizonExhausted

__all__ = [
    "TripleMode",
    "Coloring",
    "SchurTriple",
    "SchurCertificate",
    "find_monochromatic_triple",
    "is_admissible",
    "schur_number",
    "default_horizon",
    "weak_ramsey_horizon",
    "guaranteed_triple",
    "constant_rule",
    "parity_rule",
    "residue_rule",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 200


class TripleMode(str, enum.Enum):
    STRONG = "strong"
    WEAK = "weak"

    @classmethod
    def parse(cls, value) -> "TripleMode":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"mode must be 'strong' or 'weak', got {value!r}") from None

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Coloring:
    """A total map ``[1, n] -> [0, t)``.

    ``colors[i]`` is the color of the integer ``i + 1``.
    """

    t: int
    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        if not isinstance(self.t, int) or self.t < 1:
            raise ValueError(f"palette size must be >= 1, got {self.t!r}")
        if not colors:
            raise ValueError("a coloring must cover at least [1, 1]")
        for i, c in enumerate(colors):
            if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < self.t:
                raise ValueError(f"color of {i + 1} is {c!r}, outside [0, {self.t})")

    @property
    def n(self) -> int:
        return len(self.colors)

    def __getitem__(self, m: int) -> int:
        if not 1 <= m <= self.n:
            raise IndexError(f"{m} is outside [1, {self.n}]")
        return self.colors[m - 1]

    def restrict(self, n: int) -> "Coloring":
        return Coloring(self.t, self.colors[:n])

    @classmethod
    def from_function(cls, fn: Callable[[int], int], t: int, n: int) -> "Coloring":
        return cls(t, tuple(fn(m) for m in range(1, n + 1)))

    def to_dict(self) -> dict:
        return {"t": self.t, "n": self.n, "colors": list(self.colors)}

    @classmethod
    def from_dict(cls, doc: dict) -> "Coloring":
        colors = doc["colors"]
        if doc.get("n", len(colors)) != len(colors):
            raise ValueError(f"n={doc['n']} but {len(colors)} colors listed")
        return cls(int(doc["t"]), tuple(colors))


@dataclass(frozen=True)
class SchurTriple:
    a: int
    b: int
    c: int
    color: int
    mode: TripleMode

    def holds_in(self, coloring: Coloring) -> bool:
        """Independent validity check against a source coloring."""
        a, b, c = self.a, self.b, self.c
        if not 1 <= a or a + b != c or c > coloring.n:
            return False
        if self.mode is TripleMode.WEAK and not a < b:
            return False
        if self.mode is TripleMode.STRONG and not a <= b:
            return False
        return coloring[a] == coloring[b] == coloring[c] == self.color

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "color": self.color,
                "mode": self.mode.value}


@dataclass(frozen=True)
class SchurCertificate:
    """``s_value`` is the Schur number for ``(t, mode)``.

    ``witness`` is the lexicographically least admissible coloring of
    ``[1, s_value]`` with color 0 on 1 and fresh colors introduced in order;
    ``searched_through`` (= ``s_value + 1``) is the length the exhaustive
    search showed to be impossible.
    """

    t: int
    mode: TripleMode
    s_value: int
    witness: Coloring
    searched_through: int

    def to_dict(self) -> dict:
        return {
            "mode": self.mode.value,
            "t": self.t,
            "s_value": self.s_value,
            "witness_colors": list(self.witness.colors),
            "searched_through": self.searched_through,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "SchurCertificate":
        t = int(doc["t"])
        return cls(
            t=t,
            mode=TripleMode.parse(doc["mode"]),
            s_value=int(doc["s_value"]),
            witness=Coloring(t, tuple(doc["witness_colors"])),
            searched_through=int(doc["searched_through"]),
        )


def find_monochromatic_triple(coloring: Coloring, mode: TripleMode) -> Optional[SchurTriple]:
    """Smallest monochromatic triple in ``(c, a)`` order, or ``None``."""
    mode = TripleMode.parse(mode)
    col = (None,) + coloring.colors
    weak = mode is TripleMode.WEAK
    for c in range(2, coloring.n + 1):
        cc = col[c]
        top = (c - 1) // 2 if weak else c // 2
        for a in range(1, top + 1):
            if col[a] == cc and col[c - a] == cc:
                return SchurTriple(a, c - a, c, cc, mode)
    return None


def is_admissible(coloring: Coloring, mode: TripleMode) -> bool:
    return find_monochromatic_triple(coloring, mode) is None


def _search(n: int, t: int, strong: bool, descending: bool = False) -> Optional[list[int]]:
    """Admissible coloring of ``[1, n]`` or ``None``; exhaustive.

    Integers are colored in increasing order.  Class ``j`` keeps two bitsets:
    its members and every pairwise sum of its members, so ``x`` may take
    color ``j`` iff bit ``x`` of the sum set is clear.  Once all ``t`` colors
    are in use, a branch is cut as soon as some later ``y <= n`` is a sum in
    every class.  Integer 1 gets color 0 and color ``j + 1`` only appears
    after color ``j``.  Ascending order returns the lexicographically least
    coloring; descending order tries the newest color first.
    """
    members = [0] * t
    sums = [0] * t
    full = (1 << (n + 1)) - 1
    colors = [0] * (n + 1)
    saved = [0] * (n + 1)
    used_at = [0] * (n + 2)
    tried = [0] * (n + 2)
    x = 1
    while True:
        if x > n:
            return colors[1:]
        if x == 0:
            return None
        bit = 1 << x
        used = used_at[x]
        k = used + 1 if used < t else t
        placed = False
        while tried[x] < k:
            i = tried[x]
            tried[x] += 1
            j = k - 1 - i if descending else i
            old = sums[j]
            if old & bit:
                continue
            new = old | (members[j] << x)
            if strong:
                new |= bit << x
            nu = used + 1 if j == used else used
            if nu == t:
                blocked = full & ~((bit << 1) - 1)
                for q in range(t):
                    blocked &= new if q == j else sums[q]
                    if not blocked:
                        break
                if blocked:
                    continue
            members[j] |= bit
            sums[j] = new
            saved[x] = old
            colors[x] = j
            used_at[x + 1] = nu
            tried[x + 1] = 0
            x += 1
            placed = True
            break
        if not placed:
            x -= 1
            if x >= 1:
                j = colors[x]
                members[j] &= ~(1 << x)
                sums[j] = saved[x]


def _greedy_extend(colors: list[int], t: int, strong: bool, limit: int) -> list[int]:
    """Extend an admissible prefix by first-fit as far as possible."""
    members = [0] * t
    sums = [0] * t
    out = list(colors)

    def add(x, j):
        sums[j] |= members[j] << x
        if strong:
            sums[j] |= 1 << (2 * x)
        members[j] |= 1 << x

    for x, j in enumerate(out, 1):
        add(x, j)
    used = max(out) + 1 if out else 0
    x = len(out) + 1
    while x <= limit:
        for j in range(min(used + 1, t)):
            if not sums[j] >> x & 1:
                break
        else:
            break
        add(x, j)
        out.append(j)
        used = max(used, j + 1)
        x += 1
    return out


def schur_number(t: int, mode: TripleMode = TripleMode.STRONG, cap: int = DEFAULT_CAP,
                 order: str = "ascending") -> SchurCertificate:
    """Exact Schur number for ``t`` colors.

    Lengths are tested upward; each admissible coloring found is first-fit
    extended to skip ahead.  The first impossible length ``S + 1`` ends the
    search (restriction makes admissibility monotone).  ``order`` picks the
    color-branching order, ``"ascending"`` or ``"descending"``; the returned
    witness is always the canonical ascending one.

    Raises :class:`CapExceeded` if ``[1, cap]`` itself is admissible.
    """
    mode = TripleMode.parse(mode)
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"palette size must be >= 1, got {t!r}")
    if not isinstance(cap, int) or cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap!r}")
    if order not in ("ascending", "descending"):
        raise ValueError(f"order must be 'ascending' or 'descending', got {order!r}")
    strong = mode is TripleMode.STRONG
    descending = order == "descending"

    best: list[int] = []
    while True:
        if len(best) >= cap:
            raise CapExceeded(t, mode, cap, Coloring(t, tuple(best[:cap])))
        found = _search(len(best) + 1, t, strong, descending)
        if found is None:
            break
        best = _greedy_extend(found, t, strong, cap)

    s_value = len(best)
    witness = _search(s_value, t, strong)
    assert witness is not None
    return SchurCertificate(t, mode, s_value, Coloring(t, tuple(witness)), s_value + 1)


@lru_cache(maxsize=None)
def _shipped_certificates() -> dict:
    table = {}
    folder = resources.files("schureuclid") / "data"
    for entry in folder.iterdir():
        if entry.name.startswith("schur_") and entry.name.endswith(".json"):
            doc = json.loads(entry.read_text())
            table[(doc["t"], doc["mode"])] = doc
    return table


def weak_ramsey_horizon(t: int) -> int:
    """A length at which every ``t``-coloring has a weak triple.

    Color the edge ``{i, j}`` of a complete graph on vertices ``v_0 < v_1 <
    ...`` by the color of ``|v_i - v_j|``.  A monochromatic triangle
    ``i < j < k`` is a triple ``(v_j - v_i) + (v_k - v_j) = v_k - v_i``, and
    its summands differ because the vertices hold no 3-term progression
    (integers whose base-3 digits are all 0 or 1).  Pigeonhole gives
    ``R(t) <= t * (R(t - 1) - 1) + 2`` vertices, with ``R(1) = 3``.
    """
    if t < 1:
        raise ValueError("palette size must be >= 1")
    r = 3
    for s in range(2, t + 1):
        r = s * (r - 1) + 2
    return int(format(r - 1, "b"), 3)


def default_horizon(t: int, mode: TripleMode) -> int:
    """A length at which every ``t``-coloring has a monochromatic triple.

    This is ``S(t) + 1`` from the certificates shipped with the package.
    Weak mode with ``t <= 4`` and no certificate falls back to
    :func:`weak_ramsey_horizon`; anything else needs an explicit cap.
    """
    mode = TripleMode.parse(mode)
    doc = _shipped_certificates().get((t, mode.value))
    if doc is not None:
        return doc["searched_through"]
    if mode is TripleMode.WEAK and t <= 4:
        return weak_ramsey_horizon(t)
    raise CapRequired(
        f"no certified horizon for t={t}, mode={mode.value}; pass cap explicitly"
    )


def guaranteed_triple(color_fn: Callable[[int], int], t: int,
                      mode: TripleMode = TripleMode.WEAK,
                      cap: Optional[int] = None) -> SchurTriple:
    """Select a monochromatic triple from an arbitrary ``t``-coloring.

    ``color_fn`` is evaluated on prefixes ``[1, n]`` with ``n`` doubling up to
    ``cap``; the first triple in ``(c, a)`` order is returned.  By default
    ``cap`` is the certified horizon for ``(t, mode)``, at which a triple is
    guaranteed to exist.
    """
    mode = TripleMode.parse(mode)
    if cap is None:
        cap = default_horizon(t, mode)
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    colors: list[int] = []
    n = min(4, cap)
    while True:
        for m in range(len(colors) + 1, n + 1):
            c = color_fn(m)
            if not isinstance(c, int) or not 0 <= c < t:
                raise ValueError(f"color_fn({m}) = {c!r} is outside [0, {t})")
            colors.append(c)
        triple = find_monochromatic_triple(Coloring(t, tuple(colors)), mode)
        if triple is not None:
            return triple
        if n >= cap:
            raise HorizonExhausted(cap)
        n = min(2 * n, cap)


def constant_rule(m: int) -> int:
    return 0


def parity_rule(m: int) -> int:
    return m % 2


def residue_rule(k: int) -> Callable[[int], int]:
    """Color ``m`` by ``m mod k``."""
    if k < 1:
        raise ValueError("modulus must be >= 1")

    def rule(m: int) -> int:
        return m % k

    rule.__name__ = f"mod{k}"
    return rule
