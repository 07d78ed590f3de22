"""Block constructions on C-complex data.

Each move prepends new homology classes to every form ``A^eps`` and keeps
the pairing ``A^-eps = (A^eps)^T``.  Unconstrained entries come from a
seeded :class:`random.Random` over ``[-3, 3]`` so runs replay exactly.

Invariance moves (``move_M1``, ``move_M3``) leave the potential unchanged.
Skein constructions return the complexes of the links appearing in one
skein relation, built from a complex of the simplest member.
"""

from __future__ import annotations

import random
from typing import Callable

from .ccomplex import (
    CComplexData,
    CComplexError,
    key_to_signs,
    negate_key,
    sign_keys,
    validate,
)

__all__ = [
    "FILL_RANGE",
    "make_rng",
    "move_M1",
    "move_M3",
    "skein_RII",
    "skein_RIV",
    "skein_RV",
    "build_RVI_family",
    "random_ccomplex",
    "apply_script",
]

FILL_RANGE = (-3, 3)


def make_rng(seed_or_rng=None):
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def _rand(rng):
    return rng.randint(*FILL_RANGE)


def _pair_reps(n):
    """One key from each pair {eps, -eps}."""
    return [k for k in sign_keys(n) if k[0] == "-"]


def _extend(c: CComplexData, k, block: Callable, rows: Callable, cols: Callable,
            clasps=(), chi_delta=None, mu=None, clasp_colors=None):
    """Prepend ``k`` classes.

    ``block(key)`` gives the k x k corner, ``rows(key)`` the k x g strip to the
    right of it and ``cols(key)`` the g x k strip below it.
    """
    g = c.g
    forms = {}
    for key in sign_keys(c.n):
        B, R, C = block(key), rows(key), cols(key)
        A = c.forms[key]
        top = [list(B[i]) + list(R[i]) for i in range(k)]
        bottom = [list(C[i]) + list(A[i]) for i in range(g)]
        forms[key] = tuple(tuple(r) for r in top + bottom)
    chi = c.chi_complement
    if chi_delta is not None:
        chi = tuple(x + d for x, d in zip(chi, chi_delta))
    out = CComplexData(c.n, g + k, forms, tuple(c.clasp_signs) + tuple(clasps), chi,
                       tuple(mu) if mu is not None else c.mu_per_color,
                       _extend_clasp_colors(c, clasps, clasp_colors))
    bad = validate(out)
    if bad:  # pragma: no cover - constructions are paired by design
        raise CComplexError(bad)
    return out


def _extend_clasp_colors(c, clasps, colors=None):
    if c.clasp_colors is None:
        return None
    if not clasps:
        return c.clasp_colors
    if colors is None:
        return None
    return tuple(c.clasp_colors) + tuple(colors)


def _paired_strips(n, g, k, rng, row_mask=None):
    """Random strips ``R^eps`` (k x g) and ``C^eps`` (g x k) with
    ``R^-eps = (C^eps)^T``.  ``row_mask[i]`` False forces row/column ``i`` to zero."""
    R, C = {}, {}
    for key in _pair_reps(n):
        r = [[_rand(rng) if row_mask is None or row_mask[i] else 0 for _ in range(g)]
             for i in range(k)]
        cc = [[_rand(rng) if row_mask is None or row_mask[i] else 0 for i in range(k)]
              for _ in range(g)]
        R[key], C[key] = r, cc
        neg = negate_key(key)
        R[neg] = [[cc[j][i] for j in range(g)] for i in range(k)]
        C[neg] = [[r[i][j] for i in range(k)] for j in range(g)]
    return R, C


def _symmetric_scalar(n, rng):
    vals = {}
    for key in _pair_reps(n):
        vals[key] = vals[negate_key(key)] = _rand(rng)
    return vals


def _check_color(c, i):
    if not 1 <= i <= c.n:
        raise ValueError("color %r out of range 1..%d" % (i, c.n))


# -- invariance moves ------------------------------------------------------

def move_M1(c: CComplexData, rng=None, colors=(1, 2)) -> CComplexData:
    """Tube between the surfaces of two colors, creating a positive and a
    negative clasp."""
    i, j = colors
    if c.n < 2 or i == j:
        raise ValueError("M1 needs two distinct colors")
    _check_color(c, i)
    _check_color(c, j)
    rng = make_rng(rng)
    star = _symmetric_scalar(c.n, rng)
    R, C = _paired_strips(c.n, c.g, 2, rng, row_mask=[False, True])

    def delta(key):
        s = key_to_signs(key)
        return -1 if s[i - 1] > 0 and s[j - 1] > 0 else 0

    def block(key):
        return [[0, delta(key)], [delta(negate_key(key)), star[key]]]

    chi = [0 if k + 1 in (i, j) else -2 for k in range(c.n)]
    return _extend(c, 2, block, R.__getitem__, C.__getitem__, clasps=(1, -1),
                   chi_delta=chi, clasp_colors=((i, j), (i, j)))


def move_M3(c: CComplexData, rng=None, color=1) -> CComplexData:
    """Attach a handle to the surface of one color, away from the others."""
    _check_color(c, color)
    rng = make_rng(rng)
    star = _symmetric_scalar(c.n, rng)
    R, C = _paired_strips(c.n, c.g, 2, rng, row_mask=[False, True])

    def pi(key):
        return -1 if key_to_signs(key)[color - 1] > 0 else 0

    def block(key):
        return [[0, pi(key)], [pi(negate_key(key)), star[key]]]

    chi = [0 if k + 1 == color else -2 for k in range(c.n)]
    return _extend(c, 2, block, R.__getitem__, C.__getitem__, chi_delta=chi)


# -- skein constructions ---------------------------------------------------

def _corner_family(c, rng):
    star = _symmetric_scalar(c.n, rng)
    R, C = _paired_strips(c.n, c.g, 1, rng)
    return star, R, C


def skein_RII(c: CComplexData, color=1, rng=None):
    """Complexes ``(plus, minus)`` for a self-crossing of ``color`` from one for
    the smoothed link ``c``."""
    _check_color(c, color)
    rng = make_rng(rng)
    star, R, C = _corner_family(c, rng)
    chi = [0 if k + 1 == color else -1 for k in range(c.n)]
    mu = list(c.mu_per_color)
    mu[color - 1] = mu[color - 1] + 1 if mu[color - 1] == 1 else mu[color - 1] - 1
    plus = _extend(c, 1, lambda key: [[star[key]]], R.__getitem__, C.__getitem__,
                   chi_delta=chi, mu=mu)
    minus = _extend(c, 1, lambda key: [[star[key] + 1]], R.__getitem__, C.__getitem__,
                    chi_delta=chi, mu=mu)
    return plus, minus


def skein_RIV(c: CComplexData, colors=(1, 2), rng=None):
    """Complexes ``(pp, mm)`` for two strands of distinct colors clasping twice,
    from one for the unclasped link ``c``."""
    i, j = colors
    if i == j:
        raise ValueError("RIV needs two distinct colors (equal colors reduce to RII)")
    _check_color(c, i)
    _check_color(c, j)
    rng = make_rng(rng)
    star, R, C = _corner_family(c, rng)

    def bump(key):
        s = key_to_signs(key)
        return 1 if s[i - 1] == s[j - 1] else 0

    chi = [0 if k + 1 in (i, j) else -1 for k in range(c.n)]
    pp = _extend(c, 1, lambda key: [[star[key]]], R.__getitem__, C.__getitem__,
                 clasps=(1,), chi_delta=chi, clasp_colors=((i, j),))
    mm = _extend(c, 1, lambda key: [[star[key] + bump(key)]], R.__getitem__,
                 C.__getitem__, clasps=(-1,), chi_delta=chi, clasp_colors=((i, j),))
    return pp, mm


def skein_RV(c: CComplexData, colors=(1, 2)) -> CComplexData:
    """Add a disc of color ``j`` clasping positively a surface of color ``i``."""
    i, j = colors
    if i == j:
        raise ValueError("RV needs two distinct colors (equal colors reduce to RII)")
    _check_color(c, i)
    _check_color(c, j)
    chi = list(c.chi_complement)
    chi[i - 1] += 1
    mu = list(c.mu_per_color)
    mu[j - 1] += 1
    cc = None if c.clasp_colors is None else c.clasp_colors + ((i, j),)
    return CComplexData(c.n, c.g, dict(c.forms), c.clasp_signs + (1,), tuple(chi),
                        tuple(mu), cc)


# RVI: new classes alpha (meets colors 1,2) and beta (meets colors 2,3), in
# the order alpha, beta.  Corner entries as functions of (e1, e2, e3).

def _rvi_corner(index, e1, e2, e3):
    if index == 1:
        aa = 1 if (e1, e2, e3) in ((1, 1, -1), (-1, -1, 1)) else 0
        ab = 1 if e2 == e3 == 1 else 0
        ba = 1 if e2 == e3 == -1 else 0
        return [[aa, ab], [ba, 0]]
    if index == 2:
        ab = 1 if e1 == e2 == 1 else 0
        ba = 1 if e1 == e2 == -1 else 0
        bb = 1 if (e1, e2, e3) in ((-1, 1, 1), (1, -1, -1)) else 0
        return [[0, ab], [ba, bb]]
    if index == 3:
        return [[0, 0], [0, 0]]
    if index == 4:
        # signs chosen so the strip cross terms cancel in the relation
        return [[0, 1 if e2 == 1 else 0], [1 if e2 == -1 else 0, 0]]
    raise ValueError(index)


_RVI_CHI = {
    1: (-1, -1, 0),
    2: (0, -1, -1),
    3: (-1, 0, -1),
    4: (-1, 0, -1),
    5: (0, 0, -1),
    6: (-1, 0, 0),
}
_RVI_CHI_REST = {1: -2, 2: -2, 3: -2, 4: -2, 5: -1, 6: -1}


def build_RVI_family(base: CComplexData, rng=None):
    """Complexes for ``L(1), ..., L(7)`` from a complex ``base`` of ``L(7)``.

    Colors 1, 2, 3 play the roles of ``i``, ``j``, ``k``.  The strip entries of
    ``alpha`` depend only on (eps1, eps2) and those of ``beta`` only on
    (eps2, eps3); the same strips are shared by all six extensions.
    """
    if base.n < 3:
        raise ValueError("RVI needs at least three colors")
    rng = make_rng(rng)
    g = base.g
    ga = {(a, b): [_rand(rng) for _ in range(g)] for a in (1, -1) for b in (1, -1)}
    gb = {(a, b): [_rand(rng) for _ in range(g)] for a in (1, -1) for b in (1, -1)}

    def strips(key, use):
        s = key_to_signs(key)
        e1, e2, e3 = s[0], s[1], s[2]
        rows, cols = [], [[] for _ in range(g)]
        if "a" in use:
            rows.append(ga[(e1, e2)])
            col = ga[(-e1, -e2)]
            for r in range(g):
                cols[r].append(col[r])
        if "b" in use:
            rows.append(gb[(e2, e3)])
            col = gb[(-e2, -e3)]
            for r in range(g):
                cols[r].append(col[r])
        return rows, cols

    family = []
    for index in range(1, 7):
        use = "ab" if index <= 4 else ("a" if index == 5 else "b")
        k = len(use)

        def block(key, index=index):
            s = key_to_signs(key)
            if index <= 4:
                return _rvi_corner(index, s[0], s[1], s[2])
            return [[0]]

        delta = list(_RVI_CHI[index]) + [_RVI_CHI_REST[index]] * (base.n - 3)
        family.append(_extend(base, k, block,
                              lambda key, use=use: strips(key, use)[0],
                              lambda key, use=use: strips(key, use)[1],
                              chi_delta=delta))
    family.append(base)
    return family


# -- random data -----------------------------------------------------------

def random_ccomplex(rng=None, n=None, g=None, max_n=3, max_g=3) -> CComplexData:
    """Random transpose-paired data whose component counts have the parity the
    symmetry properties require."""
    rng = make_rng(rng)
    if n is None:
        n = rng.randint(1, max_n)
    if g is None:
        g = rng.randint(0, max_g)
    forms = {}
    for key in _pair_reps(n):
        m = [[_rand(rng) for _ in range(g)] for _ in range(g)]
        forms[key] = tuple(tuple(r) for r in m)
        forms[negate_key(key)] = tuple(zip(*m)) if g else ()
    clasps = tuple(rng.choice((1, -1)) for _ in range(rng.randint(0, 3)))
    chi = tuple(rng.randint(-2, 2) for _ in range(n))
    mu = [rng.randint(1, 3) for _ in range(n)]
    parity = (sum(x - 1 for x in chi) + n * g) % 2
    if sum(mu) % 2 != parity:
        mu[0] += 1
    colors = None
    if n >= 2:
        colors = tuple(tuple(rng.sample(range(1, n + 1), 2)) for _ in clasps)
    return CComplexData(n, g, forms, clasps, chi, tuple(mu), colors)


def apply_script(c: CComplexData, script):
    """Apply a list of ``{"move", "params", "seed"}`` steps.

    Skein steps keep the first output (``plus``, ``pp``, ``L(1)``).
    """
    for step in script:
        name = step["move"]
        params = dict(step.get("params", {}))
        seed = step.get("seed")
        if name == "M1":
            c = move_M1(c, seed, tuple(params.get("colors", (1, 2))))
        elif name == "M3":
            c = move_M3(c, seed, params.get("color", 1))
        elif name == "RII":
            c = skein_RII(c, params.get("color", 1), seed)[params.get("output", 0)]
        elif name == "RIV":
            c = skein_RIV(c, tuple(params.get("colors", (1, 2))), seed)[params.get("output", 0)]
        elif name == "RV":
            c = skein_RV(c, tuple(params.get("colors", (1, 2))))
        elif name == "RVI":
            c = build_RVI_family(c, seed)[params.get("output", 0)]
        else:
            raise ValueError("unknown move %r" % name)
    return c
