"""Abstract C-complexes and the determinant formula for the potential function.

A C-complex for an ``n``-colored link is recorded by the data the formula
needs: the ``2^n`` generalized Seifert matrices ``A^eps`` on ``H_1(F)``,
the clasp signs, the Euler characteristics ``chi(F - F_i)`` and the
number of link components of each color.  Then::

    nabla = sgn(F) * prod_i (t_i - t_i^-1)^(chi(F - F_i) - 1) * det(-A_F)
    A_F   = sum_eps eps(1)...eps(n) * t^eps * A^eps

Sign maps are written as strings over ``+``/``-``; position ``i`` holds
``eps(i+1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .laurent import LaurentPoly, PotentialValue, det

__all__ = [
    "CComplexError",
    "CComplexData",
    "sign_keys",
    "negate_key",
    "validate",
    "assemble_AF",
    "potential",
    "from_seifert_matrix",
]


class CComplexError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


def sign_keys(n):
    """All sign-map keys for ``n`` colors, ``-`` before ``+`` in each slot."""
    return ["".join(k) for k in product("-+", repeat=n)]


def negate_key(key):
    return key.translate(str.maketrans("+-", "-+"))


def key_to_signs(key):
    return tuple(1 if ch == "+" else -1 for ch in key)


def signs_to_key(eps):
    return "".join("+" if e > 0 else "-" for e in eps)


def _transpose(m):
    return tuple(zip(*m)) if m else ()


@dataclass(frozen=True)
class CComplexData:
    n: int
    g: int
    forms: dict
    clasp_signs: tuple = ()
    chi_complement: tuple = ()
    mu_per_color: tuple = ()
    clasp_colors: tuple = field(default=None)

    @property
    def mu(self):
        return sum(self.mu_per_color)

    @property
    def sgn(self):
        s = 1
        for c in self.clasp_signs:
            s *= c
        return s

    def form(self, eps):
        key = eps if isinstance(eps, str) else signs_to_key(eps)
        return self.forms[key]

    # -- derived complexes ---------------------------------------------
    def mirror(self):
        """C-complex of the mirror image: forms and clasp signs negate."""
        return CComplexData(self.n, self.g,
                            {k: tuple(tuple(-v for v in r) for r in m)
                             for k, m in self.forms.items()},
                            tuple(-c for c in self.clasp_signs),
                            self.chi_complement, self.mu_per_color, self.clasp_colors)

    def reverse(self):
        """Reverse every component: all surfaces flip, so each form is transposed."""
        return CComplexData(self.n, self.g,
                            {k: _transpose(m) for k, m in self.forms.items()},
                            self.clasp_signs, self.chi_complement, self.mu_per_color,
                            self.clasp_colors)

    def reverse_color(self, color):
        """Reverse the components of one color: pushes off ``F_color`` swap
        sides and the clasps on that surface change sign."""
        if self.clasp_colors is None and self.clasp_signs and self.n > 1:
            raise CComplexError(["reversing one color needs clasp_colors"])
        if not 1 <= color <= self.n:
            raise CComplexError(["no color %r" % (color,)])
        i = color - 1

        def flip(key):
            return key[:i] + negate_key(key[i]) + key[i + 1:]

        forms = {k: self.forms[flip(k)] for k in self.forms}
        if self.n == 1:
            clasps = tuple(-s for s in self.clasp_signs)
        else:
            clasps = tuple(-s if color in p else s
                           for s, p in zip(self.clasp_signs, self.clasp_colors))
        return CComplexData(self.n, self.g, forms, clasps, self.chi_complement,
                            self.mu_per_color, self.clasp_colors)

    # -- serialisation -------------------------------------------------
    def to_json(self):
        out = {
            "n": self.n,
            "g": self.g,
            "forms": {k: [list(r) for r in self.forms[k]] for k in sign_keys(self.n)
                      if k in self.forms},
            "clasp_signs": list(self.clasp_signs),
            "chi_complement": list(self.chi_complement),
            "mu_per_color": list(self.mu_per_color),
        }
        if self.clasp_colors is not None:
            out["clasp_colors"] = [list(p) for p in self.clasp_colors]
        return out

    @classmethod
    def from_json(cls, obj):
        try:
            forms = {str(k): tuple(tuple(int(v) for v in row) for row in m)
                     for k, m in obj["forms"].items()}
            cc = obj.get("clasp_colors")
            return cls(
                n=int(obj["n"]),
                g=int(obj["g"]),
                forms=forms,
                clasp_signs=tuple(int(s) for s in obj.get("clasp_signs", [])),
                chi_complement=tuple(int(x) for x in obj["chi_complement"]),
                mu_per_color=tuple(int(x) for x in obj["mu_per_color"]),
                clasp_colors=None if cc is None else tuple(tuple(int(v) for v in p) for p in cc),
            )
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise CComplexError(["malformed C-complex JSON: %s" % exc]) from None


def validate(c: CComplexData):
    """Return a list of violations (empty when the data is consistent)."""
    bad = []
    if c.n < 1:
        return ["n must be at least 1"]
    if c.g < 0:
        bad.append("g must be non-negative")
    keys = sign_keys(c.n)
    missing = [k for k in keys if k not in c.forms]
    extra = [k for k in c.forms if k not in keys]
    if missing:
        bad.append("missing forms for sign maps %s" % ",".join(missing))
    if extra:
        bad.append("unexpected form keys %s" % ",".join(extra))
    for k in keys:
        m = c.forms.get(k)
        if m is None:
            continue
        if len(m) != c.g or any(len(r) != c.g for r in m):
            bad.append("form %s is not %dx%d" % (k, c.g, c.g))
    if not bad:
        for k in keys:
            if tuple(map(tuple, c.forms[negate_key(k)])) != tuple(_transpose(c.forms[k])):
                bad.append("form %s is not the transpose of form %s" % (negate_key(k), k))
                break
    if len(c.chi_complement) != c.n:
        bad.append("chi_complement needs %d entries" % c.n)
    if len(c.mu_per_color) != c.n:
        bad.append("mu_per_color needs %d entries" % c.n)
    elif any(m < 1 for m in c.mu_per_color):
        bad.append("every color needs at least one component")
    if any(s not in (1, -1) for s in c.clasp_signs):
        bad.append("clasp signs must be +1 or -1")
    if c.clasp_colors is not None:
        if len(c.clasp_colors) != len(c.clasp_signs):
            bad.append("clasp_colors needs one pair per clasp")
        elif any(len(p) != 2 or p[0] == p[1] or not all(1 <= v <= c.n for v in p)
                 for p in c.clasp_colors):
            bad.append("clasp_colors entries must be pairs of distinct colors")
    return bad


def assemble_AF(c: CComplexData):
    """The matrix ``A_F`` over the Laurent ring in ``c.n`` variables."""
    n, g = c.n, c.g
    out = [[LaurentPoly.zero(n) for _ in range(g)] for _ in range(g)]
    for key in sign_keys(n):
        eps = key_to_signs(key)
        coeff = 1
        for e in eps:
            coeff *= e
        mono = LaurentPoly.monomial(n, eps, coeff)
        m = c.forms[key]
        for i in range(g):
            for j in range(g):
                if m[i][j]:
                    out[i][j] = out[i][j] + mono.scale(m[i][j])
    return out


def potential(c: CComplexData) -> PotentialValue:
    bad = validate(c)
    if bad:
        raise CComplexError(bad)
    af = assemble_AF(c)
    d = det([[-x for x in row] for row in af], nvars=c.n)
    if c.sgn < 0:
        d = -d
    return PotentialValue.from_exponents(d, [x - 1 for x in c.chi_complement])


def from_seifert_matrix(A, mu=1):
    """One-color C-complex given by a Seifert surface with Seifert matrix ``A``."""
    A = tuple(tuple(int(v) for v in r) for r in A)
    return CComplexData(1, len(A), {"-": A, "+": _transpose(A) if A else ()},
                        (), (0,), (mu,))
