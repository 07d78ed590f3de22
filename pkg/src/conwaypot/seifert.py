"""Seifert's algorithm on a PD diagram, and the Conway polynomial it yields.

The surface is built as a ribbon graph: one disk per Seifert circle and one
half-twisted band per crossing.  Feet of bands sit on a disk boundary in the
cyclic order the circle visits its crossings, which is all the embedding
data needed.  Homology is generated by the fundamental cycles of a BFS
spanning tree of the circle graph.  Linking of a cycle with the push-off
of another splits into a band term (half-twist contributions) and a disk
term (half the algebraic intersection of the cycles' chords), and the sum
is the Seifert form.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .diagrams import ColoredDiagram, DiagramError
from .laurent import LaurentPoly, det

__all__ = [
    "SeifertSurface",
    "seifert_circles",
    "seifert_matrix",
    "conway_from_seifert",
    "conway_of_diagram",
    "conway_z_form",
    "matrix_to_json",
    "matrix_from_json",
]


def seifert_circles(d: ColoredDiagram):
    """Seifert circles as lists of ``(crossing, role)`` ports, in traversal order.

    ``role`` is ``"u"`` for the strand leaving along the under-out side and
    ``"o"`` for the strand leaving along the over-out side.  Crossingless
    components contribute empty circles.
    """
    # after smoothing: under-in -> over-out, over-in -> under-out
    head_of = {}
    for ci, labs in enumerate(d.crossings):
        head_of[labs[0]] = (ci, "o")
        head_of[labs[d.over_in[ci]]] = (ci, "u")
    seen = set()
    circles = []
    for ci in range(len(d.crossings)):
        for role in ("o", "u"):
            if (ci, role) in seen:
                continue
            circle = []
            port = (ci, role)
            while port not in seen:
                seen.add(port)
                circle.append(port)
                c, r = port
                labs = d.crossings[c]
                out = labs[(d.over_in[c] + 2) % 4] if r == "o" else labs[2]
                port = head_of[out]
            circles.append(circle)
    circles.extend([] for _ in d.loops)
    return circles


class SeifertSurface:
    """Ribbon-graph model of the Seifert surface of a diagram."""

    def __init__(self, d: ColoredDiagram):
        self.diagram = d
        self.circles = seifert_circles(d)
        where = {}
        for k, circ in enumerate(self.circles):
            for idx, port in enumerate(circ):
                where[port] = (k, idx)
        self.bands = []
        for ci in range(len(d.crossings)):
            # the under strand leaves on the "o" port side, the over on "u"
            a, pa = where[(ci, "o")]
            b, pb = where[(ci, "u")]
            if a == b:
                raise DiagramError("crossing %d joins a Seifert circle to itself" % ci)
            self.bands.append((a, pa, b, pb, d.signs[ci]))
        self.cycles = self._fundamental_cycles()
        if self._connected and d.crossings:
            self._embed()
        else:
            self.orient = [1] * len(self.circles)
            self.inner = [(False, False)] * len(self.bands)

    def _embed(self):
        """Nesting of the circles in the plane, from the PD rotation system."""
        d = self.diagram
        slots = d._slots
        darts = [(c, p) for c in range(len(d.crossings)) for p in range(4)]
        face = {}
        nf = 0
        for start in darts:
            if start in face:
                continue
            cur = start
            while cur not in face:
                face[cur] = nf
                a, b = slots[d.crossings[cur[0]][cur[1]]]
                c2, p2 = b if a == cur else a
                cur = (c2, (p2 - 1) % 4)
            nf += 1
        if len(d.crossings) - 2 * len(d.crossings) + nf != 2:
            raise DiagramError("PD code does not describe a connected planar diagram")
        parent = list(range(nf))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        merged = []
        for ci, o in enumerate(d.over_in):
            f_in = face[(ci, 0 if o == 1 else 3)]
            f_out = face[(ci, 2 if o == 1 else 1)]
            parent[find(f_in)] = find(f_out)
            merged.append(f_in)
        # sides of each circle: face left of an arc is the face of its tail dart
        tail = {}
        for ci, labs in enumerate(d.crossings):
            tail[labs[2]] = (ci, 2)
            tail[labs[(d.over_in[ci] + 2) % 4]] = (ci, (d.over_in[ci] + 2) % 4)
        sides = []
        for circ in self.circles:
            ci, role = circ[0]
            labs = d.crossings[ci]
            lab = labs[(d.over_in[ci] + 2) % 4] if role == "o" else labs[2]
            left = find(face[tail[lab]])
            a, b = slots[lab]
            head = b if a == tail[lab] else a
            right = find(face[head])
            sides.append((left, right))
        root = find(face[(0, 0)])
        adj = {}
        for k, (l, r) in enumerate(sides):
            adj.setdefault(l, []).append((k, r))
            adj.setdefault(r, []).append((k, l))
        inside = [None] * len(self.circles)
        seen = {root}
        stack = [root]
        while stack:
            reg = stack.pop()
            for k, other in adj.get(reg, []):
                if other not in seen:
                    seen.add(other)
                    inside[k] = other
                    stack.append(other)
        if any(v is None for v in inside):
            raise DiagramError("Seifert circles do not separate the sphere consistently")
        self.orient = [1 if sides[k][0] == inside[k] else -1
                       for k in range(len(self.circles))]
        # a band is inner at its foot `a` when it lies inside circle a, etc.
        self.inner = []
        for ci, (a, _, b, _, _) in enumerate(self.bands):
            r = find(merged[ci])
            self.inner.append((r == inside[a], r == inside[b]))

    @property
    def connected(self):
        return self._connected

    def _fundamental_cycles(self):
        nc = len(self.circles)
        adj = {k: [] for k in range(nc)}
        for e, (a, _, b, _, _) in enumerate(self.bands):
            adj[a].append((e, b))
            adj[b].append((e, a))
        parent = {0: None} if nc else {}
        depth = {0: 0} if nc else {}
        queue = deque([0] if nc else [])
        tree = set()
        while queue:
            v = queue.popleft()
            for e, w in adj[v]:
                if w not in parent:
                    parent[w] = (e, v)
                    depth[w] = depth[v] + 1
                    tree.add(e)
                    queue.append(w)
        self._connected = len(parent) == nc
        if not self._connected:
            return []

        def path_up(v, top):
            # edges from v up to ancestor `top`, each as (edge, from, to)
            out = []
            while v != top:
                e, p = parent[v]
                out.append((e, v, p))
                v = p
            return out

        cycles = []
        for e, (a, _, b, _, _) in enumerate(self.bands):
            if e in tree:
                continue
            x, y = a, b
            while x != y:
                if depth[x] >= depth[y]:
                    x = parent[x][1]
                else:
                    y = parent[y][1]
            lca = x
            # cycle: a -> b along e, then b up to lca, then lca down to a
            steps = [(e, a, b)] + path_up(b, lca)
            steps += [(f, q, p) for f, p, q in reversed(path_up(a, lca))]
            cycles.append(steps)
        return cycles

    def _direction(self, e, frm):
        return 1 if self.bands[e][0] == frm else -1

    def matrix(self):
        """Seifert matrix on the fundamental cycles (list of integer rows)."""
        if not self._connected:
            raise DiagramError("Seifert surface is disconnected (split diagram)")
        cyc = self.cycles
        G = len(cyc)
        # band terms
        dirs = [{e: self._direction(e, frm) for e, frm, _ in c} for c in cyc]
        S = [[Fraction(0)] * G for _ in range(G)]
        for x in range(G):
            for y in range(G):
                tot = 0
                for e, dx in dirs[x].items():
                    dy = dirs[y].get(e)
                    if dy is not None:
                        tot += self.bands[e][4] * dx * dy
                S[x][y] = Fraction(-tot, 2)
        # disk terms: chords of each cycle on each disk, pushed off by cycle index
        chords = [dict() for _ in range(G)]
        for k, c in enumerate(cyc):
            off = Fraction(k + 1, 2 * (G + 1))
            for i, (e, frm, to) in enumerate(c):
                nxt_e = c[(i + 1) % len(c)][0]
                p = self._foot(e, to, off)
                q = self._foot(nxt_e, to, off)
                chords[k][to] = (p, q)
        # cycles routed along a disk boundary pass under bands to nested circles
        F = [[0] * G for _ in range(G)]
        strands = {}
        for k, c in enumerate(cyc):
            off = Fraction(k + 1, 2 * (G + 1))
            for e, frm, to in c:
                a, _, b, _, _ = self.bands[e]
                for disk, is_in in ((a, self.inner[e][0]), (b, self.inner[e][1])):
                    if is_in:
                        inward = 1 if frm == disk else -1
                        strands.setdefault(disk, []).append(
                            (k, self._foot(e, disk, off), inward))
        for x in range(G):
            for disk, (p, q) in chords[x].items():
                m = len(self.circles[disk])
                span = (q - p) % m
                for y, r, inward in strands.get(disk, ()):
                    if y != x and 0 < (r - p) % m < span:
                        F[x][y] -= self.orient[disk] * inward
        J = [[0] * G for _ in range(G)]
        for x in range(G):
            for y in range(G):
                if x == y:
                    continue
                tot = 0
                for disk, (p, q) in chords[x].items():
                    other = chords[y].get(disk)
                    if other is None:
                        continue
                    m = len(self.circles[disk])
                    tot += _chord_sign(p, q, other[0], other[1], m)
                J[x][y] = tot
        A = []
        for x in range(G):
            row = []
            for y in range(G):
                v = S[x][y] + Fraction(J[x][y] + F[x][y] + F[y][x], 2)
                if v.denominator != 1:
                    raise AssertionError("non-integral Seifert form entry")
                row.append(int(v))
            A.append(row)
        return A

    def _foot(self, e, disk, off):
        a, pa, b, pb, _ = self.bands[e]
        return pa + off if disk == a else pb - off


def _chord_sign(p, q, r, s, m):
    span = (q - p) % m

    def inside(u):
        return 0 < (u - p) % m < span

    ir, is_ = inside(r), inside(s)
    if ir and not is_:
        return 1
    if is_ and not ir:
        return -1
    return 0


def seifert_matrix(d: ColoredDiagram):
    return SeifertSurface(d).matrix()


def conway_from_seifert(A, split=False):
    """``det(t^-1 A^T - t A)`` as a Laurent polynomial in ``t``; with ``z = t - t^-1``
    this is the Conway polynomial."""
    if split:
        return LaurentPoly.zero(1)
    t = LaurentPoly.var(1, 0)
    ti = LaurentPoly.var(1, 0, -1)
    g = len(A)
    m = [[ti * A[j][i] - t * A[i][j] for j in range(g)] for i in range(g)]
    return det(m, nvars=1)


def conway_of_diagram(d: ColoredDiagram):
    surf = SeifertSurface(d)
    if not surf.connected:
        return LaurentPoly.zero(1)
    return conway_from_seifert(surf.matrix())


def conway_z_form(p: LaurentPoly):
    """Rewrite ``p(t)`` as a polynomial in ``z = t - t^-1``, or ``None`` if impossible."""
    if p.nvars != 1:
        raise ValueError("expected a one-variable polynomial")
    z = LaurentPoly.conway_factor(1, 0)
    rest = p
    out = LaurentPoly.zero(1)
    while not rest.is_zero():
        k = rest.max_exponents()[0]
        if k < 0:
            return None
        c = rest.coefficient((k,))
        rest = rest - (z ** k).scale(c)
        out = out + LaurentPoly.monomial(1, (k,), c)
    return out


def matrix_to_json(A):
    return {"size": len(A), "entries": [list(r) for r in A]}


def matrix_from_json(obj):
    A = [[int(v) for v in row] for row in obj["entries"]]
    if len(A) != obj.get("size", len(A)) or any(len(r) != len(A) for r in A):
        raise ValueError("Seifert matrix must be square")
    return A
