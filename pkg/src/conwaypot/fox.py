"""Independent oracle: the colored Alexander polynomial by Fox calculus.

The Wirtinger presentation is read off the PD diagram, abelianized Fox
derivatives give the Alexander matrix, and a maximal minor (divided by
``t_c - 1`` for links) gives the colored Alexander polynomial up to units.
Nothing here touches Seifert surfaces or C-complexes.
"""

from __future__ import annotations

from .diagrams import ColoredDiagram
from .laurent import (
    LaurentPoly,
    PotentialValue,
    det,
    normal_form,
    unit_witness,
)

__all__ = [
    "FoxError",
    "wirtinger",
    "fox_derivative",
    "alexander_matrix",
    "alexander_polynomial",
    "crosscheck",
    "crosscheck_values",
]


class FoxError(ArithmeticError):
    """The minor is not divisible as Fox calculus guarantees (a bug upstream)."""


def wirtinger(d: ColoredDiagram):
    """Return ``(generator_colors, relators)``.

    Generators are the over-arcs; a relator is a list of ``(generator, +-1)``.
    """
    parent = {}

    def find(a):
        while parent.get(a, a) != a:
            a = parent[a]
        return a

    for labs, o in zip(d.crossings, d.over_in):
        ra, rb = find(labs[o]), find(labs[(o + 2) % 4])
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    labels = sorted({l for c in d.crossings for l in c} | set(d.loops))
    reps = sorted({find(l) for l in labels})
    index = {r: k for k, r in enumerate(reps)}
    arc_col = d.arc_colors()
    gen_colors = [arc_col[r] for r in reps]
    relators = []
    for labs, o, s in zip(d.crossings, d.over_in, d.signs):
        a = index[find(labs[0])]
        c = index[find(labs[2])]
        b = index[find(labs[o])]
        if s > 0:
            relators.append([(c, -1), (b, 1), (a, 1), (b, -1)])
        else:
            relators.append([(c, -1), (b, -1), (a, 1), (b, 1)])
    return gen_colors, relators


def fox_derivative(word, j, gen_colors, nvars):
    """Abelianized Fox derivative of ``word`` with respect to generator ``j``."""
    out = LaurentPoly.zero(nvars)
    prefix = [0] * nvars
    for g, e in word:
        v = gen_colors[g] - 1
        if e > 0:
            if g == j:
                out = out + LaurentPoly.monomial(nvars, prefix)
            prefix[v] += 1
        else:
            prefix[v] -= 1
            if g == j:
                out = out - LaurentPoly.monomial(nvars, prefix)
    return out


def alexander_matrix(d: ColoredDiagram):
    gen_colors, relators = wirtinger(d)
    n = d.n
    return gen_colors, [[fox_derivative(r, j, gen_colors, n) for j in range(len(gen_colors))]
                        for r in relators]


def alexander_polynomial(d: ColoredDiagram, column=0):
    """Colored Alexander polynomial in ``d.n`` variables, defined up to units."""
    n = d.n
    gen_colors, m = alexander_matrix(d)
    G = len(gen_colors)
    if G == 0:
        return LaurentPoly.one(n)
    rows = len(m)
    if rows < G - 1:
        return LaurentPoly.zero(n)
    minor = [row[:column] + row[column + 1:] for row in m[:G - 1]]
    val = det(minor, nvars=n)
    if d.mu >= 2 and not val.is_zero():
        f = LaurentPoly.var(n, gen_colors[column] - 1) - 1
        q = val.exact_div(f)
        if q is None:
            raise FoxError("Alexander minor not divisible by t - 1")
        val = q
    return normal_form(val)


def _squared(p):
    return p.substitute([(1, i, 2) for i in range(p.nvars)])


def crosscheck_values(pv: PotentialValue, delta: LaurentPoly, mu, name=""):
    """Compare a potential value with the oracle's Alexander polynomial.

    ``n > 1``: ``pv`` must be a polynomial equal to ``delta(t^2)`` up to units.
    ``n = 1``: ``(t - t^-1) pv`` against ``delta(t^2)`` for knots and against
    ``(t^2 - 1) delta(t^2)`` for links.
    """
    n = pv.nvars
    if n > 1:
        if any(pv.deficiency):
            lhs = None
        else:
            lhs = pv.numerator
        rhs = _squared(delta)
    else:
        lhs = (pv * PotentialValue(LaurentPoly.conway_factor(1, 0))).numerator
        rhs = _squared(delta)
        if mu > 1:
            rhs = rhs * (LaurentPoly.var(1, 0, 2) - 1)
    if lhs is None:
        witness = None
        ok = False
    else:
        witness = unit_witness(lhs, rhs)
        ok = witness is not None
    both_zero = lhs is not None and lhs.is_zero() and rhs.is_zero()
    return {
        "link": name,
        "n": n,
        "mu": mu,
        "nabla_normal_form": normal_form(lhs).to_json() if lhs is not None else None,
        "delta_substituted_normal_form": normal_form(rhs).to_json(),
        "unit_witness": None if witness is None else
        {"sign": witness[0], "exponents": list(witness[1])},
        "pass": ok,
        "zero_equals_zero": both_zero,
    }


def crosscheck(pv: PotentialValue, d: ColoredDiagram, name=""):
    """Cross-check ``pv`` against the oracle run on the diagram ``d``."""
    if pv.nvars != d.n:
        raise ValueError("potential has %d variables, diagram has %d colors"
                         % (pv.nvars, d.n))
    return crosscheck_values(pv, alexander_polynomial(d), d.mu, name)
