"""Exact arithmetic in the Laurent ring Z[t1^+-1, ..., tn^+-1].

Polynomials are sparse maps from exponent tuples to nonzero integer
coefficients.  Values of the potential function live in
:class:`PotentialValue`, a Laurent polynomial divided by a product of
powers of ``(t_i - t_i^-1)``.
"""

from __future__ import annotations

from itertools import product as _cartesian

__all__ = [
    "LaurentPoly",
    "PotentialValue",
    "PoleAtOne",
    "NotRepresentable",
    "det",
    "equal_up_to_units",
    "normal_form",
    "unit_witness",
    "default_names",
]


class PoleAtOne(ArithmeticError):
    """Raised when evaluating t_i = 1 against a residual (t_i - t_i^-1) pole."""


class NotRepresentable(ArithmeticError):
    """A substitution produced a denominator outside the (t_i - t_i^-1) family."""


def default_names(nvars):
    if nvars == 1:
        return ["t"]
    if nvars == 2:
        return ["x", "y"]
    return ["t%d" % (i + 1) for i in range(nvars)]


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


class LaurentPoly:
    """A Laurent polynomial with integer coefficients in ``nvars`` variables."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = int(nvars)
        clean = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    exps = tuple(exps)
                    if len(exps) != self.nvars:
                        raise ValueError("exponent %r has wrong arity for %d variables"
                                         % (exps, self.nvars))
                    clean[exps] = int(c)
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars, c):
        return cls._raw(nvars, {(0,) * nvars: int(c)} if c else {})

    @classmethod
    def one(cls, nvars):
        return cls.const(nvars, 1)

    @classmethod
    def monomial(cls, nvars, exps, coeff=1):
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def var(cls, nvars, i, power=1):
        """The monomial t_i^power (0-based ``i``)."""
        e = [0] * nvars
        e[i] = power
        return cls._raw(nvars, {tuple(e): 1})

    @classmethod
    def conway_factor(cls, nvars, i):
        """t_i - t_i^-1."""
        return cls.var(nvars, i) - cls.var(nvars, i, -1)

    # -- basic protocol ------------------------------------------------
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(self.nvars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("arity mismatch: %d vs %d variables"
                                 % (self.nvars, other.nvars))
            return other
        if isinstance(other, int):
            return LaurentPoly.const(self.nvars, other)
        return NotImplemented

    # -- ring operations -----------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return LaurentPoly.zero(self.nvars)
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-unit")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("negative power of a non-unit")
            return LaurentPoly._raw(self.nvars, {tuple(x * k for x in e): c ** (-k)})
        result = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        return LaurentPoly._raw(self.nvars, {e: v * c for e, v in self._terms.items()} if c else {})

    def shift(self, exps):
        """Multiply by the monomial t^exps."""
        exps = tuple(exps)
        return LaurentPoly._raw(self.nvars, {_add_exp(e, exps): c for e, c in self._terms.items()})

    # -- structure -----------------------------------------------------
    def is_monomial(self):
        return len(self._terms) == 1

    def min_exponents(self):
        if not self._terms:
            return (0,) * self.nvars
        return tuple(min(col) for col in zip(*self._terms))

    def max_exponents(self):
        if not self._terms:
            return (0,) * self.nvars
        return tuple(max(col) for col in zip(*self._terms))

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), 0)

    def sorted_terms(self, descending=False):
        return sorted(self._terms.items(), reverse=descending)

    def leading_term(self):
        e = max(self._terms)
        return e, self._terms[e]

    # -- substitution --------------------------------------------------
    def substitute(self, rules, nvars_out=None):
        """Apply ``t_i -> s * t_j**k`` for every variable.

        ``rules[i]`` is a tuple ``(s, j, k)`` with ``s`` in {1, -1}; ``j`` is
        a target variable index (0-based, in the output ring) or ``None``
        for a constant (then ``k`` is ignored and t_i -> s).
        """
        if len(rules) != self.nvars:
            raise ValueError("need one rule per variable")
        if nvars_out is None:
            nvars_out = self.nvars
        for s, j, _k in rules:
            if s not in (1, -1):
                raise ValueError("rule sign must be +1 or -1")
            if j is not None and not 0 <= j < nvars_out:
                raise ValueError("target variable %r out of range" % (j,))
        out = {}
        for e, c in self._terms.items():
            ne = [0] * nvars_out
            sign = 1
            for x, (s, j, k) in zip(e, rules):
                if s < 0 and x % 2:
                    sign = -sign
                if j is not None:
                    ne[j] += k * x
            ne = tuple(ne)
            out[ne] = out.get(ne, 0) + sign * c
        return LaurentPoly._raw(nvars_out, {e: c for e, c in out.items() if c})

    def invert_all(self):
        return self.substitute([(1, i, -1) for i in range(self.nvars)])

    def negate_all(self):
        return self.substitute([(-1, i, 1) for i in range(self.nvars)])

    def evaluate(self, values):
        """Evaluate at rational/integer points (values nonzero where needed)."""
        from fractions import Fraction
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for v, x in zip(values, e):
                term *= Fraction(v) ** x
            total += term
        return total

    # -- division ------------------------------------------------------
    def exact_div(self, other):
        """Return ``q`` with ``other * q == self``, or ``None`` if none exists.

        Both operands are shifted into ordinary polynomials first; the
        divisor then has no monomial factor, so Laurent divisibility
        coincides with polynomial divisibility, decided by lex division.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self.nvars)
        if other.is_monomial():
            (e, c), = other._terms.items()
            if any(v % c for v in self._terms.values()):
                return None
            neg = tuple(-x for x in e)
            return LaurentPoly._raw(self.nvars, {_add_exp(k, neg): v // c
                                                 for k, v in self._terms.items()})
        b_shift = tuple(-x for x in other.min_exponents())
        a_shift = tuple(-x for x in self.min_exponents())
        b = other.shift(b_shift)._terms
        r = dict(self.shift(a_shift)._terms)
        lt_b = max(b)
        lc_b = b[lt_b]
        q = {}
        while r:
            lt = max(r)
            diff = tuple(x - y for x, y in zip(lt, lt_b))
            if min(diff) < 0:
                return None
            c, rem = divmod(r[lt], lc_b)
            if rem:
                return None
            q[diff] = c
            for e, v in b.items():
                k = _add_exp(e, diff)
                nv = r.get(k, 0) - c * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        q = LaurentPoly._raw(self.nvars, q)
        # q * b' = a'  =>  q * (other * m_b) = self * m_a
        back = tuple(x - y for x, y in zip(b_shift, a_shift))
        return q.shift(back)

    def divides(self, other):
        return other.exact_div(self) is not None

    # -- formatting / serialisation ------------------------------------
    def format(self, names=None):
        if names is None:
            names = default_names(self.nvars)
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms(descending=True):
            factors = []
            for name, x in zip(names, e):
                if x == 1:
                    factors.append(name)
                elif x:
                    factors.append("%s^%d" % (name, x))
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = "%d*%s" % (mag, mono)
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append(("- " if c < 0 else "+ ") + body)
        return " ".join(pieces)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "LaurentPoly(%d, %r)" % (self.nvars, dict(self.sorted_terms()))

    def to_json(self):
        return [{"exponents": list(e), "coeff": c} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, records, nvars=None):
        if nvars is None:
            if not records:
                raise ValueError("cannot infer arity of an empty term list")
            nvars = len(records[0]["exponents"])
        terms = {}
        for rec in records:
            e = tuple(int(x) for x in rec["exponents"])
            terms[e] = terms.get(e, 0) + int(rec["coeff"])
        return cls(nvars, terms)


# -- units ---------------------------------------------------------------

def normal_form(p):
    """Representative of ``p`` modulo units +-t^v.

    Shift so every variable's minimal exponent is 0, then make the
    coefficient of the lex-smallest exponent positive.
    """
    if p.is_zero():
        return p
    q = p.shift(tuple(-x for x in p.min_exponents()))
    e0 = min(q._terms)
    if q._terms[e0] < 0:
        q = -q
    return q


def equal_up_to_units(a, b):
    if a.nvars != b.nvars:
        raise ValueError("arity mismatch")
    return normal_form(a) == normal_form(b)


def unit_witness(a, b):
    """Return ``(sign, exps)`` with ``a == sign * t^exps * b``, or ``None``."""
    if a.is_zero() or b.is_zero():
        return (1, (0,) * a.nvars) if a.is_zero() and b.is_zero() else None
    if not equal_up_to_units(a, b):
        return None
    ea, eb = a.min_exponents(), b.min_exponents()
    exps = tuple(x - y for x, y in zip(ea, eb))
    shifted = b.shift(exps)
    return (1, exps) if shifted == a else (-1, exps)


# -- determinants ----------------------------------------------------------

COFACTOR_THRESHOLD = 4


def _check_square(m):
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
    return n


def _det_cofactor(m, nvars):
    n = len(m)
    if n == 0:
        return LaurentPoly.one(nvars)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = LaurentPoly.zero(nvars)
    for j, entry in enumerate(m[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = entry * _det_cofactor(minor, nvars)
        total = total + term if j % 2 == 0 else total - term
    return total


def _det_bareiss(m, nvars):
    n = len(m)
    shifts = [0] * nvars
    rows = []
    for row in m:
        lows = [min((e.min_exponents()[v] for e in row if not e.is_zero()), default=0)
                for v in range(nvars)]
        shifts = [s + x for s, x in zip(shifts, lows)]
        neg = tuple(-x for x in lows)
        rows.append([e.shift(neg) for e in row])
    sign = 1
    prev = LaurentPoly.one(nvars)
    for k in range(n - 1):
        if rows[k][k].is_zero():
            for i in range(k + 1, n):
                if not rows[i][k].is_zero():
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero(nvars)
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            for j in range(k + 1, n):
                num = rows[i][j] * pivot - rik * rows[k][j]
                q = num.exact_div(prev)
                if q is None:  # pragma: no cover - Sylvester identity guarantees exactness
                    raise ArithmeticError("Bareiss step not exact")
                rows[i][j] = q
            rows[i][k] = LaurentPoly.zero(nvars)
        prev = pivot
    result = rows[n - 1][n - 1]
    if sign < 0:
        result = -result
    return result.shift(tuple(shifts))


def det(m, nvars=None):
    """Exact determinant of a square matrix of :class:`LaurentPoly` entries.

    The empty matrix has determinant 1.  Matrices up to ``COFACTOR_THRESHOLD``
    use cofactor expansion; larger ones use fraction-free elimination on
    monomial-cleared rows.
    """
    n = _check_square(m)
    if nvars is None:
        if n == 0:
            raise ValueError("nvars required for the empty matrix")
        nvars = m[0][0].nvars
    for row in m:
        for e in row:
            if e.nvars != nvars:
                raise ValueError("matrix entries of mixed arity")
    if n <= COFACTOR_THRESHOLD:
        return _det_cofactor(m, nvars)
    return _det_bareiss([list(r) for r in m], nvars)


def matmul(a, b, nvars):
    n, k = len(a), len(b)
    cols = len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(cols):
            acc = LaurentPoly.zero(nvars)
            for l in range(k):
                acc = acc + a[i][l] * b[l][j]
            row.append(acc)
        out.append(row)
    return out


# -- potential values ------------------------------------------------------

class PotentialValue:
    """``numerator * prod_i (t_i - t_i^-1)^(-deficiency[i])`` in canonical form.

    Canonical: for each ``i`` with positive deficiency the numerator is not
    divisible by ``t_i - t_i^-1``.  Zero has zero deficiency.  Equality is
    equality of canonical forms.
    """

    __slots__ = ("numerator", "deficiency")

    def __init__(self, numerator, deficiency=None):
        if isinstance(numerator, int):
            raise TypeError("use PotentialValue.const for integers")
        n = numerator.nvars
        if deficiency is None:
            deficiency = (0,) * n
        deficiency = tuple(int(d) for d in deficiency)
        if len(deficiency) != n:
            raise ValueError("deficiency length must equal nvars")
        num = numerator
        # negative deficiencies are positive powers: multiply them in
        fixed = []
        for i, d in enumerate(deficiency):
            if d < 0:
                num = num * LaurentPoly.conway_factor(n, i) ** (-d)
                d = 0
            fixed.append(d)
        if num.is_zero():
            fixed = [0] * n
        else:
            for i in range(n):
                if fixed[i]:
                    f = LaurentPoly.conway_factor(n, i)
                    while fixed[i]:
                        q = num.exact_div(f)
                        if q is None:
                            break
                        num = q
                        fixed[i] -= 1
        self.numerator = num
        self.deficiency = tuple(fixed)

    @classmethod
    def const(cls, nvars, c):
        return cls(LaurentPoly.const(nvars, c))

    @classmethod
    def from_exponents(cls, numerator, exponents):
        """numerator * prod (t_i - t_i^-1)^exponents[i] for arbitrary integer exponents."""
        return cls(numerator, tuple(-x for x in exponents))

    @property
    def nvars(self):
        return self.numerator.nvars

    def is_zero(self):
        return self.numerator.is_zero()

    def is_polynomial(self):
        return not any(self.deficiency)

    def reduce(self):
        return PotentialValue(self.numerator, self.deficiency)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            other = PotentialValue(other)
        if not isinstance(other, PotentialValue):
            return NotImplemented
        return self.numerator == other.numerator and self.deficiency == other.deficiency

    def __hash__(self):
        return hash((self.numerator, self.deficiency))

    def _coerce(self, other):
        if isinstance(other, PotentialValue):
            if other.nvars != self.nvars:
                raise ValueError("arity mismatch")
            return other
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("arity mismatch")
            return PotentialValue(other)
        if isinstance(other, int):
            return PotentialValue.const(self.nvars, other)
        return NotImplemented

    def _lifted(self, target):
        num = self.numerator
        for i, (d, t) in enumerate(zip(self.deficiency, target)):
            if t > d:
                num = num * LaurentPoly.conway_factor(self.nvars, i) ** (t - d)
        return num

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        target = tuple(max(a, b) for a, b in zip(self.deficiency, other.deficiency))
        return PotentialValue(self._lifted(target) + other._lifted(target), target)

    __radd__ = __add__

    def __neg__(self):
        return PotentialValue(-self.numerator, self.deficiency)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = tuple(a + b for a, b in zip(self.deficiency, other.deficiency))
        return PotentialValue(self.numerator * other.numerator, d)

    __rmul__ = __mul__

    def substitute(self, rules, nvars_out=None):
        """Substitute ``t_i -> s * t_j**k`` (see :meth:`LaurentPoly.substitute`).

        The image of ``t_i - t_i^-1`` is ``s*sign(k)*(t_j - t_j^-1)*Q`` with
        ``Q = (t_j^|k| - t_j^-|k|)/(t_j - t_j^-1)``; ``Q`` must divide out of
        the numerator when |k| > 1.
        """
        if nvars_out is None:
            nvars_out = self.nvars
        num = self.numerator.substitute(rules, nvars_out)
        new_def = [0] * nvars_out
        sign = 1
        for i, d in enumerate(self.deficiency):
            if not d:
                continue
            s, j, k = rules[i]
            if j is None or k == 0:
                raise PoleAtOne("variable %d has a pole of order %d at the evaluation point"
                                % (i + 1, d))
            if (s * (1 if k > 0 else -1)) < 0 and d % 2:
                sign = -sign
            new_def[j] += d
            mag = abs(k)
            if mag > 1:
                fj = LaurentPoly.conway_factor(nvars_out, j)
                cof = (LaurentPoly.var(nvars_out, j, mag)
                       - LaurentPoly.var(nvars_out, j, -mag)).exact_div(fj)
                for _ in range(d):
                    q = num.exact_div(cof)
                    if q is None:
                        raise NotRepresentable("denominator leaves the (t - t^-1) family")
                    num = q
        if sign < 0:
            num = -num
        return PotentialValue(num, new_def)

    def invert_all(self):
        return self.substitute([(1, i, -1) for i in range(self.nvars)])

    def negate_all(self):
        return self.substitute([(-1, i, 1) for i in range(self.nvars)])

    def format(self, names=None):
        if names is None:
            names = default_names(self.nvars)
        num = self.numerator.format(names)
        if not any(self.deficiency):
            return num
        dens = []
        for name, d in zip(names, self.deficiency):
            if d == 1:
                dens.append("(%s - %s^-1)" % (name, name))
            elif d:
                dens.append("(%s - %s^-1)^%d" % (name, name, d))
        den = dens[0] if len(dens) == 1 else "(" + "".join(dens) + ")"
        if len(self.numerator) > 1:
            num = "(" + num + ")"
        return "%s / %s" % (num, den)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "PotentialValue(%r, %r)" % (self.numerator, self.deficiency)

    def to_json(self):
        return {"nvars": self.nvars, "terms": self.numerator.to_json(),
                "deficiency": list(self.deficiency)}

    @classmethod
    def from_json(cls, obj):
        n = obj.get("nvars")
        if n is None:
            n = len(obj["deficiency"])
        return cls(LaurentPoly.from_json(obj["terms"], n), obj["deficiency"])


def signed_monomial_sum(nvars, signs_pattern):
    """Sum over sign maps in ``signs_pattern`` of eps(1)...eps(n) t^eps."""
    total = LaurentPoly.zero(nvars)
    for eps in signs_pattern:
        c = 1
        for e in eps:
            c *= e
        total = total + LaurentPoly.monomial(nvars, eps, c)
    return total


def all_sign_maps(n):
    """All maps {1..n} -> {+1,-1}, in a fixed order (first coordinate slowest)."""
    return [tuple(e) for e in _cartesian((-1, 1), repeat=n)]
