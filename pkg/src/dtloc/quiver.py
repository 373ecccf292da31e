"""Framed quivers with potential: data model, text format, slopes, cycles.

Quiver description document (line oriented, whitespace insensitive, ``#``
comments):

    vertex <id>
    arrow <name> <src> <dst> ;
    potential +|- <arrow> <arrow> ... ;
    framing <vertex>

Arrows and potential statements are terminated by ``;`` (a trailing ``;`` on
vertex/framing lines is tolerated).  Every potential word must be a closed
path: the target of each arrow equals the source of the next, cyclically.
Framing multiplicity is fixed at 1; one framing statement per framed vertex.
Most quivers carry a single framing, but disjoint unions built for the
product-law check carry one per component.

A slope assigns an integer weight to every arrow; it is admissible when every
potential term has total weight zero, so the one-parameter scaling it defines
leaves the potential invariant.  The admissible slopes form a full integer
sublattice of Z^arrows, computed here as the kernel of the term/arrow
incidence matrix by exact unimodular column reduction.

Elementary cycles are *simple* closed paths: no vertex is visited twice
except the basepoint.  Their slope weights cut out the wall-and-chamber
structure on the slope lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import QuiverStructureError, QuiverSyntaxError, SlopeError


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class PotentialTerm:
    sign: int
    word: tuple[str, ...]

    def render(self) -> str:
        sym = "+" if self.sign > 0 else "-"
        return f"{sym} {' '.join(self.word)}"


class QuiverWithPotential:
    """Immutable framed quiver with a potential given as signed cyclic words."""

    def __init__(
        self,
        vertices: Sequence[str],
        arrows: Sequence[Arrow],
        potential: Sequence[PotentialTerm],
        framings: Sequence[str],
        name: str = "quiver",
    ):
        self.name = name
        self.vertices = tuple(vertices)
        self.arrows = tuple(arrows)
        self.potential = tuple(potential)
        self.framings = tuple(framings)
        self._validate()
        self.arrow_by_name = {a.name: a for a in self.arrows}
        self._vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.warnings = self._quality_warnings()

    def _validate(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverStructureError("duplicate vertex identifier")
        vset = set(self.vertices)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise QuiverStructureError(f"duplicate arrow name: {', '.join(dup)}")
        for a in self.arrows:
            if a.source not in vset:
                raise QuiverStructureError(f"arrow {a.name}: unknown source vertex {a.source}")
            if a.target not in vset:
                raise QuiverStructureError(f"arrow {a.name}: unknown target vertex {a.target}")
        by_name = {a.name: a for a in self.arrows}
        for term in self.potential:
            if term.sign not in (1, -1):
                raise QuiverStructureError("potential sign must be +1 or -1")
            if not term.word:
                raise QuiverStructureError("empty potential word")
            for n in term.word:
                if n not in by_name:
                    raise QuiverStructureError(f"unknown arrow in potential: {n}")
            for i, n in enumerate(term.word):
                nxt = term.word[(i + 1) % len(term.word)]
                if by_name[n].target != by_name[nxt].source:
                    raise QuiverStructureError(
                        f"non-closed potential term '{' '.join(term.word)}': "
                        f"arrow {n} ends at {by_name[n].target} but {nxt} starts at "
                        f"{by_name[nxt].source}"
                    )
        if not self.framings:
            raise QuiverStructureError("missing framing declaration")
        if len(set(self.framings)) != len(self.framings):
            raise QuiverStructureError(
                "repeated framing vertex: framing multiplicity is fixed at 1"
            )
        for v in self.framings:
            if v not in vset:
                raise QuiverStructureError(f"framing at unknown vertex {v}")

    def _quality_warnings(self) -> tuple[str, ...]:
        if not self.potential:
            return ()
        used = {n for t in self.potential for n in t.word}
        unused = [a.name for a in self.arrows if a.name not in used]
        if unused:
            return (f"arrows not appearing in any potential term: {', '.join(unused)}",)
        return ()

    @property
    def framing(self) -> str:
        """The framed vertex, for the common single-framing case."""
        if len(self.framings) != 1:
            raise QuiverStructureError("quiver has multiple framings; use .framings")
        return self.framings[0]

    def vertex_index(self, v: str) -> int:
        return self._vertex_index[v]

    def arrows_from(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def structural_key(self):
        return (self.vertices, self.arrows, self.potential, self.framings)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuiverWithPotential):
            return NotImplemented
        return self.structural_key() == other.structural_key()

    def __hash__(self) -> int:
        return hash(self.structural_key())

    def __repr__(self) -> str:
        return (
            f"QuiverWithPotential({self.name}: {len(self.vertices)} vertices, "
            f"{len(self.arrows)} arrows, {len(self.potential)} potential terms)"
        )


# ---------------------------------------------------------------------------
# Parsing and serialization


def _tokenize(text: str):
    """Yield (token, line, column) with ';' split out and '#' comments dropped."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        i = 0
        while i < len(body):
            ch = body[i]
            if ch.isspace():
                i += 1
                continue
            if ch == ";":
                yield ";", lineno, i + 1
                i += 1
                continue
            start = i
            while i < len(body) and not body[i].isspace() and body[i] != ";":
                i += 1
            yield body[start:i], lineno, start + 1


def parse_quiver(text: str, name: str = "quiver") -> QuiverWithPotential:
    """Parse a quiver description document; raise QuiverSyntaxError with position."""
    tokens = list(_tokenize(text))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, -1, -1)

    def take():
        nonlocal pos
        if pos >= len(tokens):
            last = tokens[-1] if tokens else ("", 1, 1)
            raise QuiverSyntaxError("unexpected end of document", last[1], last[2])
        t = tokens[pos]
        pos += 1
        return t

    def expect_word(what: str) -> str:
        tok, line, col = take()
        if tok == ";":
            raise QuiverSyntaxError(f"expected {what}, found ';'", line, col)
        return tok

    def optional_semicolon():
        nonlocal pos
        if pos < len(tokens) and tokens[pos][0] == ";":
            pos += 1

    def require_semicolon(context: str):
        tok, line, col = take()
        if tok != ";":
            raise QuiverSyntaxError(f"expected ';' after {context}, found '{tok}'", line, col)

    vertices: list[str] = []
    arrows: list[Arrow] = []
    potential: list[PotentialTerm] = []
    framings: list[str] = []

    while pos < len(tokens):
        tok, line, col = take()
        if tok == "vertex":
            vertices.append(expect_word("vertex identifier"))
            optional_semicolon()
        elif tok == "arrow":
            aname = expect_word("arrow name")
            src = expect_word("source vertex")
            dst = expect_word("target vertex")
            require_semicolon("arrow statement")
            arrows.append(Arrow(aname, src, dst))
        elif tok == "potential":
            sign_tok, sline, scol = take()
            if sign_tok not in ("+", "-"):
                raise QuiverSyntaxError(
                    f"expected potential sign '+' or '-', found '{sign_tok}'", sline, scol
                )
            word: list[str] = []
            while True:
                t, tl, tc = peek()
                if t is None:
                    raise QuiverSyntaxError("unterminated potential statement", sline, scol)
                if t == ";":
                    take()
                    break
                word.append(expect_word("arrow name"))
            if not word:
                raise QuiverSyntaxError("empty potential word", sline, scol)
            potential.append(PotentialTerm(1 if sign_tok == "+" else -1, tuple(word)))
        elif tok == "framing":
            framings.append(expect_word("framing vertex"))
            optional_semicolon()
        else:
            raise QuiverSyntaxError(f"unknown statement '{tok}'", line, col)

    return QuiverWithPotential(vertices, arrows, potential, framings, name=name)


def serialize_quiver(q: QuiverWithPotential) -> str:
    """Canonical text form; parse(serialize(q)) is structurally equal to q."""
    lines = [f"vertex {v}" for v in q.vertices]
    lines += [f"arrow {a.name} {a.source} {a.target} ;" for a in q.arrows]
    lines += [f"potential {t.render()} ;" for t in q.potential]
    lines += [f"framing {v}" for v in q.framings]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Built-in models

C3_DOCUMENT = """\
# Affine 3-space: one vertex, three loops, commutator potential.
vertex v
arrow x v v ;
arrow y v v ;
arrow z v v ;
potential + x y z ;
potential - x z y ;
framing v
"""

CONIFOLD_DOCUMENT = """\
# Conifold (Klebanov-Witten) quiver with quartic potential.
vertex n1
vertex n2
arrow a1 n1 n2 ;
arrow a2 n1 n2 ;
arrow b1 n2 n1 ;
arrow b2 n2 n1 ;
potential + a1 b1 a2 b2 ;
potential - a1 b2 a2 b1 ;
framing n1
"""

SINGLE_LOOP_DOCUMENT = """\
# One vertex, one loop, no potential: ideals are chains.
vertex v
arrow l v v ;
framing v
"""

BUILTIN_DOCUMENTS = {
    "c3": C3_DOCUMENT,
    "conifold": CONIFOLD_DOCUMENT,
    "loop1": SINGLE_LOOP_DOCUMENT,
}


def builtin_quiver(model: str) -> QuiverWithPotential:
    """Parse one of the compiled-in model documents (exercises the parser)."""
    try:
        doc = BUILTIN_DOCUMENTS[model]
    except KeyError:
        raise QuiverStructureError(
            f"unknown built-in model '{model}' (available: {', '.join(sorted(BUILTIN_DOCUMENTS))})"
        ) from None
    return parse_quiver(doc, name=model)


# ---------------------------------------------------------------------------
# Slopes


class Slope:
    """Integer weight per arrow: the cocharacter of a one-parameter scaling."""

    __slots__ = ("_weights",)

    def __init__(self, weights):
        self._weights = dict(weights)
        for k, v in self._weights.items():
            if not isinstance(v, int) or isinstance(v, bool):
                raise SlopeError(f"slope weight for {k} must be an integer, got {v!r}")

    @property
    def weights(self) -> dict[str, int]:
        return dict(self._weights)

    def weight(self, arrow_name: str) -> int:
        try:
            return self._weights[arrow_name]
        except KeyError:
            raise SlopeError(f"slope assigns no weight to arrow {arrow_name}") from None

    def as_tuple(self, q: QuiverWithPotential) -> tuple[int, ...]:
        return tuple(self.weight(a.name) for a in q.arrows)

    def negate(self) -> "Slope":
        return Slope({k: -v for k, v in self._weights.items()})

    def is_zero(self) -> bool:
        return all(v == 0 for v in self._weights.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Slope):
            return NotImplemented
        return self._weights == other._weights

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._weights.items())))

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in sorted(self._weights.items()))
        return f"Slope({inner})"


def slope_from_values(q: QuiverWithPotential, values: Sequence[int]) -> Slope:
    """Build a slope from weights listed in arrow declaration order."""
    if len(values) != len(q.arrows):
        raise SlopeError(
            f"slope arity {len(values)} does not match arrow count {len(q.arrows)}"
        )
    return Slope({a.name: int(v) for a, v in zip(q.arrows, values)})


def term_weight(term: PotentialTerm, s: Slope) -> int:
    return sum(s.weight(n) for n in term.word)


def validate_slope(q: QuiverWithPotential, s: Slope) -> list[PotentialTerm]:
    """Return the potential terms whose total slope weight is nonzero."""
    for a in q.arrows:
        s.weight(a.name)  # raises SlopeError if missing
    return [t for t in q.potential if term_weight(t, s) != 0]


def _integer_kernel(rows: list[list[int]], n: int) -> list[list[int]]:
    """Basis of the integer kernel {x in Z^n : A x = 0} by unimodular column ops.

    Column operations are tracked in U, so the surviving columns of U form a
    basis of the full (saturated) kernel lattice.  Deterministic.
    """
    A = [list(r) for r in rows]
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    active = list(range(n))
    for r in range(len(A)):
        # Reduce row r on the active columns to at most one nonzero entry.
        while True:
            nz = [j for j in active if A[r][j] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda j: (abs(A[r][j]), j))
            j0, j1 = nz[0], nz[1]
            qt = A[r][j1] // A[r][j0]
            for i in range(len(A)):
                A[i][j1] -= qt * A[i][j0]
            for i in range(n):
                U[i][j1] -= qt * U[i][j0]
        nz = [j for j in active if A[r][j] != 0]
        if nz:
            active.remove(nz[0])
    return [[U[i][j] for i in range(n)] for j in active]


def slope_lattice_basis(q: QuiverWithPotential) -> list[Slope]:
    """Basis of the lattice of admissible slopes (potential-invariant cocharacters)."""
    n = len(q.arrows)
    index = {a.name: i for i, a in enumerate(q.arrows)}
    rows = []
    for term in q.potential:
        row = [0] * n
        for arrow_name in term.word:
            row[index[arrow_name]] += 1
        rows.append(row)
    basis = _integer_kernel(rows, n)
    return [Slope({a.name: vec[i] for i, a in enumerate(q.arrows)}) for vec in basis]


def slope_coordinates(q: QuiverWithPotential, basis: Sequence[Slope], s: Slope) -> tuple[int, ...]:
    """Integer coordinates of an admissible slope in the given lattice basis."""
    violations = validate_slope(q, s)
    if violations:
        bad = "; ".join(t.render() for t in violations)
        raise SlopeError(f"slope does not leave the potential invariant: {bad}")
    arrows = [a.name for a in q.arrows]
    cols = [[Fraction(b.weight(an)) for an in arrows] for b in basis]
    target = [Fraction(s.weight(an)) for an in arrows]
    # Solve sum_i c_i * cols[i] = target by Gaussian elimination over Q.
    m, r = len(arrows), len(basis)
    mat = [[cols[i][row] for i in range(r)] + [target[row]] for row in range(m)]
    piv_rows = []
    col = 0
    for i in range(r):
        piv = next((rr for rr in range(col, m) if mat[rr][i] != 0), None)
        if piv is None:
            continue
        mat[col], mat[piv] = mat[piv], mat[col]
        pv = mat[col][i]
        mat[col] = [x / pv for x in mat[col]]
        for rr in range(m):
            if rr != col and mat[rr][i] != 0:
                f = mat[rr][i]
                mat[rr] = [x - f * y for x, y in zip(mat[rr], mat[col])]
        piv_rows.append((i, col))
        col += 1
    coords = [Fraction(0)] * r
    for i, rr in piv_rows:
        coords[i] = mat[rr][r]
    for rr in range(m):
        residual = sum(coords[i] * cols[i][rr] for i in range(r))
        if residual != target[rr]:
            raise SlopeError("slope is not in the admissible lattice")
    out = []
    for c in coords:
        if c.denominator != 1:
            raise SlopeError("slope has non-integral coordinates in the lattice basis")
        out.append(int(c))
    return tuple(out)


# ---------------------------------------------------------------------------
# Elementary cycles


@dataclass(frozen=True)
class CycleFunctional:
    """Simple closed path up to rotation; pairs with slopes by summing weights."""

    word: tuple[str, ...]

    def weight_of(self, s: Slope) -> int:
        return sum(s.weight(n) for n in self.word)

    def render(self) -> str:
        return " ".join(self.word)

    def __str__(self) -> str:
        return self.render()


def _canonical_rotation(word: tuple[str, ...]) -> tuple[str, ...]:
    rotations = [word[i:] + word[:i] for i in range(len(word))]
    return min(rotations)


def elementary_cycles(q: QuiverWithPotential, max_len: int) -> list[CycleFunctional]:
    """All simple closed paths of length <= max_len, deduplicated up to rotation.

    Simple means no vertex repeats except the basepoint, so the cycle length
    is bounded by the number of vertices regardless of max_len.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    out_by = {v: q.arrows_from(v) for v in q.vertices}
    found: set[tuple[str, ...]] = set()

    def extend(start: str, current: str, path: list[str], visited: set[str]):
        for a in out_by[current]:
            if a.target == start:
                found.add(_canonical_rotation(tuple(path + [a.name])))
            if len(path) + 1 < max_len and a.target not in visited and a.target != start:
                visited.add(a.target)
                extend(start, a.target, path + [a.name], visited)
                visited.remove(a.target)

    for v in q.vertices:
        extend(v, v, [], {v})
    return [CycleFunctional(w) for w in sorted(found, key=lambda w: (len(w), w))]


# ---------------------------------------------------------------------------
# Disjoint unions (for the product-law check)


def disjoint_union(
    q1: QuiverWithPotential, q2: QuiverWithPotential
) -> tuple[QuiverWithPotential, dict[str, str], dict[str, str]]:
    """Disjoint union with names kept apart by prefixes.

    Returns the union quiver and the arrow-name maps for each factor, so
    slopes on the factors can be transported to the union.
    """
    def prefixed(q: QuiverWithPotential, tag: str):
        vmap = {v: f"{tag}.{v}" for v in q.vertices}
        amap = {a.name: f"{tag}.{a.name}" for a in q.arrows}
        arrows = [Arrow(amap[a.name], vmap[a.source], vmap[a.target]) for a in q.arrows]
        terms = [
            PotentialTerm(t.sign, tuple(amap[n] for n in t.word)) for t in q.potential
        ]
        framings = [vmap[v] for v in q.framings]
        return list(vmap.values()), arrows, terms, framings, amap

    v1, a1, t1, f1, amap1 = prefixed(q1, "u1")
    v2, a2, t2, f2, amap2 = prefixed(q2, "u2")
    union = QuiverWithPotential(
        v1 + v2, a1 + a2, t1 + t2, f1 + f2, name=f"{q1.name}+{q2.name}"
    )
    return union, amap1, amap2


def transport_slopes(
    union_maps: tuple[dict[str, str], dict[str, str]], s1: Slope, s2: Slope
) -> Slope:
    """Merge factor slopes into a slope on the disjoint union."""
    amap1, amap2 = union_maps
    merged = {amap1[k]: v for k, v in s1.weights.items()}
    merged.update({amap2[k]: v for k, v in s2.weights.items()})
    return Slope(merged)
