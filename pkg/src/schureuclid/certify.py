"""Independent checkers for the JSON documents the CLI emits.

Nothing here calls into the search or arithmetic code it checks.  Schur
certificates are re-derived with a different solver (most-constrained
integer first, per-integer color availability masks); the quartic sweep uses
a hand-rolled Newton square root; smooth-number sweeps enumerate by trial
division and strip fourth powers directly.

Each ``verify_*`` function raises :class:`VerificationError` naming the first
violated invariant and returns a short summary string on success.
"""

from __future__ import annotations

from .errors import VerificationError

__all__ = [
    "KINDS",
    "classify",
    "verify_document",
    "verify_schur",
    "verify_quartic",
    "verify_triple_sweep",
    "verify_demo",
    "verify_witness",
    "verify_decomposition",
    "verify_selection",
    "coloring_exists",
]

KINDS = {
    "schur": {"mode", "t", "s_value", "witness_colors", "searched_through"},
    "quartic": {"z_max", "solutions", "elapsed_note"},
    "triple_sweep": {"basis", "bound", "mode", "triples_examined", "violations"},
    "demo": {"basis", "bound", "witness", "triples_examined", "violations"},
    "witness": {"basis", "witness", "scan_note"},
    "decomposition": {"m", "basis", "u", "quotients", "residues", "mantissa", "index"},
    "selection": {"a", "b", "c", "color", "mode", "rule", "t"},
}


def _fail(msg):
    raise VerificationError(msg)


def _need(cond, msg):
    if not cond:
        _fail(msg)


def _int(doc, key, low=None):
    v = doc.get(key)
    _need(isinstance(v, int) and not isinstance(v, bool), f"{key} must be an integer")
    if low is not None:
        _need(v >= low, f"{key} must be >= {low}, got {v}")
    return v


def classify(doc) -> str:
    _need(isinstance(doc, dict), "certificate must be a JSON object")
    keys = set(doc)
    for kind, expected in KINDS.items():
        if keys == expected:
            return kind
    _fail(f"unrecognized certificate keys: {sorted(keys)}")


def verify_document(doc) -> str:
    kind = classify(doc)
    return globals()[f"verify_{kind}"](doc)


# -- Schur certificates ----------------------------------------------------

def _mode(doc):
    mode = doc.get("mode")
    _need(mode in ("strong", "weak"), f"mode must be 'strong' or 'weak', got {mode!r}")
    return mode == "strong"


def _first_triple(colors, strong):
    n = len(colors)
    for a in range(1, n + 1):
        for b in range(a if strong else a + 1, n + 1 - a):
            if colors[a - 1] == colors[b - 1] == colors[a + b - 1]:
                return a, b, a + b
    return None


def coloring_exists(n, t, strong, prefix=()):
    """Is there an admissible ``t``-coloring of ``[1, n]`` extending ``prefix``?

    Colors of 1..len(prefix) are fixed; the rest are searched by always
    branching on the uncolored integer with the fewest colors left.  Only
    one unused color is ever tried, since unused colors are interchangeable.
    """
    full = (1 << t) - 1
    avail = [full] * (n + 1)
    color = [-1] * (n + 1)
    classes = [[] for _ in range(t)]

    def block(z, bit, trail):
        if color[z] < 0 and avail[z] & bit:
            avail[z] ^= bit
            trail.append((z, bit))
            return avail[z] != 0
        return True

    def place(y, j, trail):
        bit = 1 << j
        if not avail[y] & bit:
            return False
        for a in classes[j]:
            s = a + y
            if s <= n and not block(s, bit, trail):
                return False
            d = y - a if y > a else a - y
            if (strong or d != min(a, y)) and not block(d, bit, trail):
                return False
        if strong:
            if 2 * y <= n and not block(2 * y, bit, trail):
                return False
            if y % 2 == 0 and not block(y // 2, bit, trail):
                return False
        color[y] = j
        classes[j].append(y)
        return True

    if len(prefix) > n:
        return False
    used = 0
    for y, j in enumerate(prefix, 1):
        if not 0 <= j < t or not place(y, j, []):
            return False
        used = max(used, j + 1)

    def solve(used, left):
        if left == 0:
            return True
        best, best_count = 0, t + 1
        for y in range(1, n + 1):
            if color[y] < 0:
                count = bin(avail[y]).count("1")
                if count < best_count:
                    best, best_count = y, count
                    if count <= 1:
                        break
        y = best
        for j in range(min(used + 1, t)):
            trail = []
            if place(y, j, trail):
                if solve(max(used, j + 1), left - 1):
                    return True
                color[y] = -1
                classes[j].pop()
            for z, bit in trail:
                avail[z] |= bit
        return False

    return solve(used, n - len(prefix))


def verify_schur(doc, refute=True) -> str:
    """Check a Schur certificate.

    The witness must be admissible, in canonical form, and the
    lexicographically least admissible coloring of its length; with
    ``refute`` the length ``s_value + 1`` is shown to admit no coloring.
    """
    strong = _mode(doc)
    t = _int(doc, "t", 1)
    s = _int(doc, "s_value", 1)
    upto = _int(doc, "searched_through", 1)
    colors = doc.get("witness_colors")
    _need(isinstance(colors, list), "witness_colors must be a list")
    _need(len(colors) == s, f"witness has {len(colors)} colors but s_value is {s}")
    _need(upto == s + 1, f"searched_through must be s_value + 1 = {s + 1}, got {upto}")
    for i, c in enumerate(colors, 1):
        _need(isinstance(c, int) and not isinstance(c, bool) and 0 <= c < t,
              f"color of {i} is {c!r}, outside [0, {t})")
    hit = _first_triple(colors, strong)
    _need(hit is None, f"witness has monochromatic triple {hit}")
    high = -1
    for i, c in enumerate(colors, 1):
        _need(c <= high + 1, f"witness not canonical: color {c} first used at {i} "
                             f"before color {high + 1}")
        high = max(high, c)
    used = 0
    for i, c in enumerate(colors):
        for smaller in range(min(c, used + 1)):
            _need(not coloring_exists(s, t, strong, colors[:i] + [smaller]),
                  f"witness is not lexicographically least: position {i + 1} "
                  f"admits color {smaller}")
        used = max(used, c + 1)
    if refute:
        _need(not coloring_exists(s + 1, t, strong),
              f"[1, {s + 1}] admits an admissible {t}-coloring")
    return f"schur: S={s} for t={t} ({'strong' if strong else 'weak'}) verified"


# -- quartic sweep ---------------------------------------------------------

def _root_from_above(d, guess):
    s = guess
    while True:
        nxt = (s + d // s) // 2
        if nxt >= s:
            return s
        s = nxt


def _quartic_scan(z_max):
    found = []
    for z in range(2, z_max + 1):
        z4 = z**4
        s = z * z
        for y in range(1, z):
            d = z4 - y**4
            s = _root_from_above(d, s)
            if s * s == d:
                found.append([s, y, z])
    return found


def verify_quartic(doc) -> str:
    z_max = _int(doc, "z_max", 1)
    sols = doc.get("solutions")
    _need(isinstance(sols, list), "solutions must be a list")
    for sol in sols:
        _need(isinstance(sol, list) and len(sol) == 3, f"malformed solution {sol!r}")
        x, y, z = sol
        _need(z**4 - y**4 == x * x, f"listed solution {sol} does not satisfy the equation")
    found = _quartic_scan(z_max)
    _need(found == sols, f"independent scan found {found}, certificate lists {sols}")
    return f"quartic: {len(found)} solutions with z <= {z_max} confirmed"


# -- smooth sweeps ---------------------------------------------------------

def _trial_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _basis(doc):
    basis = doc.get("basis")
    _need(isinstance(basis, list) and basis, "basis must be a non-empty list")
    for p in basis:
        _need(isinstance(p, int) and _trial_prime(p), f"basis entry {p!r} is not prime")
    _need(all(a < b for a, b in zip(basis, basis[1:])), "basis must be strictly ascending")
    return basis


def _cofactor(m, basis):
    for p in basis:
        while m % p == 0:
            m //= p
    return m


def _strip_fourth_powers(m, basis):
    for p in basis:
        q = p**4
        while m % q == 0:
            m //= q
    return m


def _sweep(basis, bound, strict):
    smooth = [m for m in range(1, bound + 1) if _cofactor(m, basis) == 1]
    lookup = set(smooth)
    mant = {m: _strip_fourth_powers(m, basis) for m in smooth}
    examined, bad = 0, []
    for c in smooth:
        for a in smooth:
            b = c - a
            if b < a or (strict and b == a):
                break
            if b in lookup:
                examined += 1
                if mant[a] == mant[b] == mant[c]:
                    bad.append([a, b, c])
    bad.sort()
    return examined, bad


def _check_sweep(doc, strict):
    basis = _basis(doc)
    bound = _int(doc, "bound", 3)
    examined, bad = _sweep(basis, bound, strict)
    _need(doc["triples_examined"] == examined,
          f"triples_examined is {doc['triples_examined']}, recount gives {examined}")
    _need(sorted(doc["violations"]) == bad,
          f"violations listed {doc['violations']}, recount gives {bad}")
    return basis, bound, examined


def verify_triple_sweep(doc) -> str:
    strict = not _mode(doc)
    _, bound, examined = _check_sweep(doc, strict)
    return f"sweep: {examined} smooth triples <= {bound} recounted"


def verify_witness(doc) -> str:
    basis = _basis(doc)
    w = _int(doc, "witness", 2)
    _need(_trial_prime(w), f"witness {w} is not prime")
    _need(w not in basis, f"witness {w} is in the basis")
    for m in range(2, w):
        _need(_cofactor(m, basis) == 1, f"{m} < witness is not smooth; witness not minimal")
    _need(isinstance(doc.get("scan_note"), str), "scan_note must be a string")
    return f"witness: {w} is the least prime outside {basis}"


def verify_demo(doc) -> str:
    verify_witness({"basis": doc.get("basis"), "witness": doc.get("witness"),
                    "scan_note": ""})
    _, bound, examined = _check_sweep(doc, True)
    return f"demo: witness {doc['witness']}, {examined} smooth triples <= {bound} recounted"


def verify_decomposition(doc) -> str:
    basis = _basis(doc)
    m = _int(doc, "m", 1)
    u = _int(doc, "u", 1)
    d = _int(doc, "mantissa", 1)
    q, r = doc["quotients"], doc["residues"]
    _need(len(q) == len(basis) == len(r), "exponent vectors must match the basis length")
    _need(all(isinstance(x, int) and 0 <= x < 4 for x in r), "residues must lie in [0, 4)")
    _need(u**4 * d == m, f"u^4 * mantissa = {u**4 * d} != {m}")
    pu, pd = 1, 1
    for p, qi, ri in zip(basis, q, r):
        pu *= p**qi
        pd *= p**ri
    _need(pu == u, "u does not match its quotient vector")
    _need(pd == d, "mantissa does not match its residue vector")
    _need(doc["index"] == sum(ri * 4**i for i, ri in enumerate(r)),
          "index does not match the residue vector")
    return f"decomposition: {m} = {u}^4 * {d} verified"


def _rule(name):
    if name == "const":
        return lambda m: 0
    if name == "parity":
        return lambda m: m % 2
    if isinstance(name, str) and name.startswith("mod") and name[3:].isdigit():
        k = int(name[3:])
        _need(k >= 1, "modulus must be >= 1")
        return lambda m: m % k
    _fail(f"unknown coloring rule {name!r}")


def verify_selection(doc) -> str:
    strong = _mode(doc)
    fn = _rule(doc.get("rule"))
    t = _int(doc, "t", 1)
    a, b, c = (_int(doc, key, 1) for key in ("a", "b", "c"))
    _need(a + b == c, f"{a} + {b} != {c}")
    _need(a <= b if strong else a < b, "summands violate the mode's ordering")
    colors = [fn(m) for m in range(1, c + 1)]
    _need(all(0 <= x < t for x in colors), f"rule {doc['rule']} leaves [0, {t})")
    _need(colors[a - 1] == colors[b - 1] == colors[c - 1] == doc["color"],
          "triple is not monochromatic in the stated color")
    for cc in range(2, c + 1):
        for aa in range(1, cc):
            bb = cc - aa
            if bb < aa or (not strong and bb == aa) or (cc, aa) >= (c, a):
                continue
            _need(not colors[aa - 1] == colors[bb - 1] == colors[cc - 1],
                  f"earlier triple ({aa}, {bb}, {cc}) was skipped")
    return f"selection: ({a}, {b}, {c}) is the first monochromatic triple"
