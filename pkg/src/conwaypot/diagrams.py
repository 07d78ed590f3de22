"""Oriented, colored link diagrams in PD notation.

Conventions
-----------
A crossing ``X[a,b,c,d]`` lists its four arc labels counterclockwise,
starting at the incoming under-strand; the under-strand therefore runs
from ``a`` to ``c``.  The over-strand enters at position 1 or 3.  With
both strands drawn pointing "up", a crossing is positive (right-handed)
when the over-strand runs from bottom-left to top-right; in PD terms the
crossing is positive iff the over-strand enters at position 3.

Orientation is read from the under passes.  A component that never
passes under is oriented by its labels at its lowest-index crossing: the
over-strand enters from ``l`` when the other label is ``l + 1`` (or from
the component's maximal label when the pair is ``(max, min)``), otherwise
from the smaller label.  :meth:`ColoredDiagram.to_text` relabels arcs
consecutively along orientation so this rule always round-trips.

A crossingless circle is written ``O[a]``.

Components are ordered by their smallest arc label; the ``colors:``
header assigns colors (1-based) to components in that order.  Example::

    colors: 1,2
    X[4,1,3,2] X[2,3,1,4]
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property

__all__ = [
    "DiagramError",
    "ColoredDiagram",
    "parse_pd",
    "from_braid",
]


class DiagramError(ValueError):
    """Malformed or inconsistent diagram data."""


def _rotate(labels, over_in, r):
    # rotate so old position r becomes position 0
    new = tuple(labels[(p + r) % 4] for p in range(4))
    return new, (over_in - r) % 4


def _fallback_over_in(labels, comp_labels):
    b, d = labels[1], labels[3]
    if len(comp_labels) > 2:
        if d == b + 1:
            return 1
        if b == d + 1:
            return 3
        lo, hi = min(comp_labels), max(comp_labels)
        if (b, d) == (hi, lo):
            return 1
        if (d, b) == (hi, lo):
            return 3
    return 1 if b <= d else 3


def _orient(crossings):
    """Choose the over-strand entry position (1 or 3) of every crossing."""
    slots = {}
    for ci, labels in enumerate(crossings):
        for p, lab in enumerate(labels):
            slots.setdefault(lab, []).append((ci, p))

    def other_end(slot):
        a, b = slots[crossings[slot[0]][slot[1]]]
        return b if a == slot else a

    over_in = [None] * len(crossings)
    seen = set()
    for ci in range(len(crossings)):
        for p in range(4):
            if (ci, p) in seen:
                continue
            # walk one unoriented cycle; "entered" slots are heads in walk order
            passes = []
            s = (ci, p)
            while True:
                out = (s[0], (s[1] + 2) % 4)
                seen.add(s)
                seen.add(out)
                passes.append((s, out))
                s = other_end(out)
                if s == (ci, p):
                    break
                if s in seen:  # pragma: no cover - guarded by multiplicity check
                    raise DiagramError("component traversal does not close up")
            agree = set()
            for ent, _ in passes:
                if ent[1] in (0, 2):
                    agree.add(ent[1] == 0)
            if len(agree) > 1:
                raise DiagramError("under-strands disagree on the orientation of a component")
            if agree:
                forward = agree.pop()
            else:
                comp_labels = {crossings[e[0]][e[1]] for e, _ in passes}
                first = min(passes, key=lambda pr: pr[0][0])
                c0 = first[0][0]
                want = _fallback_over_in(crossings[c0], comp_labels)
                forward = first[0][1] == want
            for ent, ext in passes:
                head = ent if forward else ext
                if head[1] in (1, 3):
                    over_in[head[0]] = head[1]
    return over_in


@dataclass(frozen=True)
class ColoredDiagram:
    """An oriented, colored link diagram.

    ``over_in[i]`` is the PD position (1 or 3) where the over-strand of
    crossing ``i`` enters.  ``colors[k]`` is the color of component ``k``
    (components ordered by smallest arc label).
    """

    crossings: tuple
    over_in: tuple
    loops: tuple = ()
    colors: tuple = ()
    _arc_colors: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        labels = {}
        for labs in self.crossings:
            if len(labs) != 4:
                raise DiagramError("a crossing needs exactly four labels")
            for lab in labs:
                labels[lab] = labels.get(lab, 0) + 1
        for lab, k in labels.items():
            if k != 2:
                raise DiagramError("arc label %r appears %d time(s); expected 2" % (lab, k))
        for lab in self.loops:
            if lab in labels:
                raise DiagramError("loop label %r is also used by a crossing" % (lab,))
        if len(set(self.loops)) != len(self.loops):
            raise DiagramError("duplicate loop label")
        if len(self.over_in) != len(self.crossings):
            raise DiagramError("one over-strand entry per crossing required")
        for o in self.over_in:
            if o not in (1, 3):
                raise DiagramError("over-strand must enter at position 1 or 3")
        comps = self.components
        if self._arc_colors is not None:
            cols = []
            for comp in comps:
                cs = {self._arc_colors[lab] for lab in comp}
                if len(cs) != 1:
                    raise DiagramError("operation merges components of different colors")
                cols.append(cs.pop())
            object.__setattr__(self, "colors", tuple(cols))
        elif not self.colors:
            object.__setattr__(self, "colors", (1,) * len(comps))
        object.__setattr__(self, "_arc_colors", None)
        if len(self.colors) != len(comps):
            raise DiagramError("%d colors given for %d components"
                               % (len(self.colors), len(comps)))
        used = set(self.colors)
        if used != set(range(1, len(used) + 1)):
            raise DiagramError("coloring must be onto {1..n}")

    # -- derived structure ---------------------------------------------
    @cached_property
    def _slots(self):
        slots = {}
        for ci, labs in enumerate(self.crossings):
            for p, lab in enumerate(labs):
                slots.setdefault(lab, []).append((ci, p))
        return slots

    def _other_end(self, slot):
        a, b = self._slots[self.crossings[slot[0]][slot[1]]]
        return b if a == slot else a

    def _is_head(self, slot):
        ci, p = slot
        return p == 0 or p == self.over_in[ci]

    @cached_property
    def components(self):
        """Arc labels of each component in orientation order, sorted by min label."""
        comps = []
        seen = set()
        for ci in range(len(self.crossings)):
            for p in range(4):
                s = (ci, p)
                if s in seen or not self._is_head(s):
                    continue
                arcs = []
                cur = s
                while True:
                    seen.add(cur)
                    arcs.append(self.crossings[cur[0]][cur[1]])
                    out = (cur[0], (cur[1] + 2) % 4)
                    seen.add(out)
                    nxt = self._other_end(out)
                    if not self._is_head(nxt):
                        raise DiagramError("orientation of arc %r is inconsistent"
                                           % (self.crossings[out[0]][out[1]],))
                    cur = nxt
                    if cur == s:
                        break
                k = arcs.index(min(arcs))
                comps.append(arcs[k:] + arcs[:k])
        for lab in self.loops:
            comps.append([lab])
        comps.sort(key=min)
        return comps

    @cached_property
    def component_of(self):
        return {lab: k for k, comp in enumerate(self.components) for lab in comp}

    @property
    def mu(self):
        return len(self.components)

    @property
    def n(self):
        return max(self.colors) if self.colors else 0

    def arc_colors(self):
        return {lab: self.colors[k] for lab, k in self.component_of.items()}

    @cached_property
    def signs(self):
        return tuple(1 if o == 3 else -1 for o in self.over_in)

    def under_component(self, ci):
        return self.component_of[self.crossings[ci][0]]

    def over_component(self, ci):
        return self.component_of[self.crossings[ci][1]]

    def mu_per_color(self):
        counts = [0] * self.n
        for c in self.colors:
            counts[c - 1] += 1
        return counts

    def linking_number(self, c1, c2):
        """Half the signed count of crossings between components ``c1`` and ``c2``."""
        if c1 == c2:
            raise DiagramError("linking number needs two distinct components")
        total = 0
        for ci, s in enumerate(self.signs):
            pair = {self.under_component(ci), self.over_component(ci)}
            if pair == {c1, c2}:
                total += s
        if total % 2:
            raise DiagramError("odd crossing count between two components")
        return total // 2

    def is_split_visibly(self):
        """True if the crossing graph of the components is disconnected."""
        m = self.mu
        if m <= 1:
            return False
        adj = {k: set() for k in range(m)}
        for ci in range(len(self.crossings)):
            a, b = self.under_component(ci), self.over_component(ci)
            adj[a].add(b)
            adj[b].add(a)
        seen = {0}
        stack = [0]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) < m

    # -- transforms ----------------------------------------------------
    def _rebuild(self, crossings, over_in, loops, arc_colors):
        return ColoredDiagram(tuple(tuple(c) for c in crossings), tuple(over_in),
                              tuple(loops), (), dict(arc_colors))

    def recolor(self, colors):
        return ColoredDiagram(self.crossings, self.over_in, self.loops, tuple(colors))

    def mirror(self):
        """Mirror image: every crossing changes sign."""
        cr, oi = [], []
        for labels, o in zip(self.crossings, self.over_in):
            new, no = _rotate(labels, 0, o)
            cr.append(new)
            oi.append(no)
        return self._rebuild(cr, oi, self.loops, self.arc_colors())

    def switch(self, x):
        """Change crossing ``x`` only."""
        cr, oi = list(self.crossings), list(self.over_in)
        cr[x], oi[x] = _rotate(cr[x], 0, oi[x])
        return self._rebuild(cr, oi, self.loops, self.arc_colors())

    def reverse_components(self, which):
        which = set(which)
        cr, oi = [], []
        for ci, (labels, o) in enumerate(zip(self.crossings, self.over_in)):
            rev_under = self.under_component(ci) in which
            rev_over = self.over_component(ci) in which
            if rev_under:
                labels, o = _rotate(labels, o, 2)
            if rev_over:
                o = (o + 2) % 4
            cr.append(labels)
            oi.append(o)
        return self._rebuild(cr, oi, self.loops, self.arc_colors())

    def reverse_color(self, color):
        if not 1 <= color <= self.n:
            raise DiagramError("color %r out of range" % (color,))
        return self.reverse_components(k for k, c in enumerate(self.colors) if c == color)

    def reverse(self):
        return self.reverse_components(range(self.mu))

    def disjoint_union(self, other):
        labels = [lab for c in self.crossings for lab in c] + list(self.loops)
        off = max(labels, default=0)
        cr = list(self.crossings) + [tuple(l + off for l in c) for c in other.crossings]
        oi = list(self.over_in) + list(other.over_in)
        loops = list(self.loops) + [l + off for l in other.loops]
        ac = self.arc_colors()
        ac.update({lab + off: c for lab, c in other.arc_colors().items()})
        return self._rebuild(cr, oi, loops, ac)

    def smooth(self, x):
        """Oriented smoothing at crossing ``x``."""
        labels, o = self.crossings[x], self.over_in[x]
        parent = {}

        def find(a):
            while parent.get(a, a) != a:
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        union(labels[0], labels[(o + 2) % 4])
        union(labels[o], labels[2])
        ac = self.arc_colors()
        new_ac = {}
        for lab, col in ac.items():
            r = find(lab)
            if new_ac.setdefault(r, col) != col:
                raise DiagramError("smoothing merges components of different colors")
        cr, oi = [], []
        for ci, (labs, ov) in enumerate(zip(self.crossings, self.over_in)):
            if ci == x:
                continue
            cr.append(tuple(find(l) for l in labs))
            oi.append(ov)
        used = {l for c in cr for l in c}
        loops = sorted({find(l) for l in labels} - used) + [l for l in self.loops]
        loops = sorted(set(loops))
        return self._rebuild(cr, oi, loops, {l: c for l, c in new_ac.items()
                                             if l in used or l in loops})

    def crossing_skein(self, x):
        """Return ``(switched, smoothed)`` diagrams at crossing ``x``."""
        if not 0 <= x < len(self.crossings):
            raise DiagramError("no crossing %r" % (x,))
        return self.switch(x), self.smooth(x)

    # -- serialisation -------------------------------------------------
    def relabeled(self):
        """Equivalent diagram with arcs numbered 1.. consecutively along orientation.

        Each component starts at the arc entering its lowest-index crossing.
        """
        heads = {}
        for ci, labs in enumerate(self.crossings):
            heads[labs[0]] = ci
            heads[labs[self.over_in[ci]]] = ci
        mapping = {}
        nxt = 1
        for comp in self.components:
            if len(comp) == 1 and comp[0] in self.loops:
                mapping[comp[0]] = nxt
                nxt += 1
                continue
            k = min(range(len(comp)), key=lambda i: heads[comp[i]])
            for lab in comp[k:] + comp[:k]:
                mapping[lab] = nxt
                nxt += 1
        ac = {mapping[l]: c for l, c in self.arc_colors().items()}
        cr = [tuple(mapping[l] for l in c) for c in self.crossings]
        return self._rebuild(cr, self.over_in, [mapping[l] for l in self.loops], ac)

    def to_text(self, relabel=True):
        d = self.relabeled() if relabel else self
        toks = ["X[%s]" % ",".join(str(l) for l in c) for c in d.crossings]
        toks += ["O[%d]" % l for l in d.loops]
        return "colors: %s\n%s\n" % (",".join(map(str, d.colors)), " ".join(toks))

    def to_json(self, relabel=True):
        d = self.relabeled() if relabel else self
        return {"crossings": [list(c) for c in d.crossings], "loops": list(d.loops),
                "colors": list(d.colors)}

    @classmethod
    def from_json(cls, obj):
        cr = [tuple(int(x) for x in c) for c in obj.get("crossings", [])]
        return build_diagram(cr, obj.get("loops", []), obj.get("colors") or None)


def build_diagram(crossings, loops=(), colors=None):
    crossings = tuple(tuple(c) for c in crossings)
    labels = {}
    for labs in crossings:
        if len(labs) != 4:
            raise DiagramError("a crossing needs exactly four labels")
        for lab in labs:
            labels[lab] = labels.get(lab, 0) + 1
    for lab, k in labels.items():
        if k != 2:
            raise DiagramError("arc label %r appears %d time(s); expected 2" % (lab, k))
    over_in = _orient(crossings)
    return ColoredDiagram(crossings, tuple(over_in), tuple(loops),
                          tuple(colors) if colors else ())


_TOKEN = re.compile(r"([XO])\[([^\]]*)\]")


def parse_pd(text):
    """Parse the PD text format (or its JSON mirror) into a :class:`ColoredDiagram`."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            return ColoredDiagram.from_json(json.loads(stripped))
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise DiagramError("bad diagram JSON: %s" % exc) from None
    colors = None
    braid = None
    body = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.match(r"^([a-z]+)\s*:\s*(.*)$", line)
        if m:
            key, val = m.groups()
            nums = [int(v) for v in re.split(r"[,\s]+", val.strip()) if v]
            if key == "colors":
                colors = nums
            elif key == "braid":
                braid = nums
            else:
                raise DiagramError("unknown header %r" % key)
            continue
        body.append(line)
    if braid is not None:
        if body:
            raise DiagramError("give either a braid word or crossings, not both")
        return from_braid(braid, colors)
    src = " ".join(body)
    crossings, loops = [], []
    pos = 0
    for m in _TOKEN.finditer(src):
        gap = src[pos:m.start()]
        if gap.strip(" ,;\t"):
            raise DiagramError("syntax error near %r" % gap.strip())
        pos = m.end()
        try:
            nums = [int(v) for v in m.group(2).split(",")]
        except ValueError:
            raise DiagramError("non-integer label in %r" % m.group(0)) from None
        if m.group(1) == "X":
            if len(nums) != 4:
                raise DiagramError("%r needs four labels" % m.group(0))
            crossings.append(tuple(nums))
        else:
            if len(nums) != 1:
                raise DiagramError("%r needs one label" % m.group(0))
            loops.append(nums[0])
    if src[pos:].strip(" ,;\t"):
        raise DiagramError("syntax error near %r" % src[pos:].strip())
    if not crossings and not loops:
        raise DiagramError("empty diagram")
    return build_diagram(crossings, loops, colors)


def from_braid(word, colors=None, strands=None):
    """Closure of a braid word (``k`` = sigma_k, ``-k`` = its inverse).

    In sigma_k the strand moving from position k to k+1 passes over, which
    makes sigma_k a positive crossing.
    """
    if strands is None:
        strands = max((abs(w) for w in word), default=0) + 1
    if any(w == 0 or abs(w) >= strands for w in word):
        raise DiagramError("braid generator out of range")
    bottom = list(range(1, strands + 1))
    cur = list(bottom)
    nxt = strands + 1
    raw = []
    for w in word:
        i = abs(w) - 1
        a, b = cur[i], cur[i + 1]
        out_i, out_j = nxt, nxt + 1
        nxt += 2
        if w > 0:
            raw.append((b, out_j, out_i, a))
        else:
            raw.append((a, b, out_j, out_i))
        cur[i], cur[i + 1] = out_i, out_j
    # close up: top label at position p is identified with bottom label p
    parent = {}

    def find(a):
        while parent.get(a, a) != a:
            a = parent[a]
        return a

    for top, bot in zip(cur, bottom):
        ra, rb = find(top), find(bot)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    crossings = [tuple(find(l) for l in c) for c in raw]
    used = {l for c in crossings for l in c}
    loops = sorted({find(b) for b in bottom} - used)
    over_in = [3 if w > 0 else 1 for w in word]
    d = ColoredDiagram(tuple(crossings), tuple(over_in), tuple(loops))
    d = d.relabeled()
    if colors:
        d = d.recolor(colors)
    return d
