"""Permutations of {0, ..., n-1} as tuples of images.

Composition convention used everywhere in this package:

    compose(p, q)(x) == p(q(x))

so in a product the right factor acts first, and a cycle (c0 c1 ... ck)
maps each c_i to c_{i+1}.
"""
from __future__ import annotations

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_perm(p) -> bool:
    return isinstance(p, tuple) and sorted(p) == list(range(len(p)))


def compose(p: Perm, q: Perm) -> Perm:
    """Return p after q, i.e. x -> p(q(x))."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Nontrivial cycles, each starting at its minimum moved point,
    sorted by that minimum."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        out.append(tuple(cyc))
    return out


def from_cycles(n: int, cycs) -> Perm:
    images = list(range(n))
    for cyc in cycs:
        if len(set(cyc)) != len(cyc):
            raise ValueError(f"repeated point in cycle {cyc}")
        for i, c in enumerate(cyc):
            if not 0 <= c < n:
                raise ValueError(f"point {c} out of range 0..{n - 1}")
            images[c] = cyc[(i + 1) % len(cyc)]
    p = tuple(images)
    if not is_perm(p):
        raise ValueError(f"cycles {cycs} overlap")
    return p


def transposition(n: int, a: int, b: int) -> Perm:
    return from_cycles(n, [(a, b)])


def signature(p: Perm) -> int:
    """+1 for even permutations, -1 for odd."""
    return -1 if sum(len(c) - 1 for c in cycles(p)) % 2 else 1


def order(p: Perm) -> int:
    from math import lcm

    return lcm(1, *(len(c) for c in cycles(p)))


def parse_cycle_string(text: str, n: int | None = None) -> Perm:
    """Parse cycle notation like "(0 1 2)(3 4)".  Points are 0-based and
    space-separated.  If n is omitted the degree is 1 + max point."""
    text = text.strip()
    if text in ("", "()"):
        if n is None:
            raise ValueError("empty permutation needs an explicit degree")
        return identity(n)
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"malformed cycle string: {text!r}")
    cycs = []
    for chunk in text[1:-1].split(")("):
        pts = tuple(int(tok) for tok in chunk.replace(",", " ").split())
        if not pts:
            raise ValueError(f"empty cycle in {text!r}")
        cycs.append(pts)
    deg = n if n is not None else 1 + max(max(c) for c in cycs)
    return from_cycles(deg, cycs)


def to_cycle_string(p: Perm) -> str:
    cycs = cycles(p)
    if not cycs:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycs)
