"""Group arithmetic: finite groups, f.g. abelian groups, presented groups.

All groups share a small duck-typed interface::

    identity, mul(a, b), inv(a), equal(a, b) -> Truth, is_finite,
    order (None when infinite), label(a), parse(literal)

Finite group elements are indices 0..n-1, abelian group elements are integer
tuples and presented group elements are freely reduced words.
"""
import itertools
import random
import re
from collections import deque
from dataclasses import dataclass, field
from math import gcd

from . import linalg
from .errors import GroupTooLarge, ParseError, UnknownGenerator
from .truth import Truth


class Group:
    is_finite = False
    order = None

    def product(self, items):
        acc = self.identity
        for x in items:
            acc = self.mul(acc, x)
        return acc

    def power(self, a, k):
        if k < 0:
            a, k = self.inv(a), -k
        acc = self.identity
        for _ in range(k):
            acc = self.mul(acc, a)
        return acc

    def equal(self, a, b):
        return Truth.of(a == b)

    def label(self, a):
        return str(a)


# ------------------------------------------------------------ finite ------

class FiniteGroup(Group):
    """Group given by a full multiplication table on 0..n-1."""

    is_finite = True

    def __init__(self, table, labels=None, name=None, check=True, seed=0):
        self.table = [list(row) for row in table]
        n = len(self.table)
        self.order = n
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        self.name = name or f"table group of order {n}"
        if check:
            _check_group_table(self.table, seed)
        ident = [e for e in range(n) if all(self.table[e][x] == x for x in range(n))]
        self.identity = ident[0]
        self._inv = [0] * n
        for a in range(n):
            for b in range(n):
                if self.table[a][b] == self.identity:
                    self._inv[a] = b
                    break
        self._by_label = {lab: i for i, lab in enumerate(self.labels)}

    def __repr__(self):
        return f"FiniteGroup({self.name})"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(tuple(map(tuple, self.table)))

    def elements(self):
        return list(range(self.order))

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inv[a]

    def label(self, a):
        return self.labels[a]

    def parse(self, literal):
        if isinstance(literal, int) and 0 <= literal < self.order:
            return literal
        text = str(literal).strip()
        if text in self._by_label:
            return self._by_label[text]
        if re.fullmatch(r"-?\d+", text) and 0 <= int(text) < self.order:
            return int(text)
        raise ParseError(f"{literal!r} is not an element of {self.name}")

    def element_order(self, a):
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def is_abelian(self):
        n = self.order
        return all(self.table[a][b] == self.table[b][a] for a in range(n) for b in range(a))

    def generating_set(self):
        """Greedy small generating set in element order."""
        gens = []
        span = {self.identity}
        for g in range(self.order):
            if g not in span:
                gens.append(g)
                span = subgroup_closure(gens, self)
        return gens

    # constructors
    @classmethod
    def cyclic(cls, n):
        if n < 1:
            raise ValueError("cyclic group needs n >= 1")
        table = [[(a + b) % n for b in range(n)] for a in range(n)]
        return cls(table, [str(i) for i in range(n)], f"Z_{n}", check=False)

    @classmethod
    def trivial(cls):
        return cls.cyclic(1)

    @classmethod
    def dihedral(cls, n):
        """Symmetries of the n-gon, order 2n; element k + n*e is r^k s^e."""
        def mul(a, b):
            ka, ea = a % n, a // n
            kb, eb = b % n, b // n
            k = (ka + (kb if ea == 0 else -kb)) % n
            return k + n * ((ea + eb) % 2)

        size = 2 * n
        table = [[mul(a, b) for b in range(size)] for a in range(size)]

        def lab(a):
            k, e = a % n, a // n
            r = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
            s = "s" if e else ""
            return (r + s) or "1"

        return cls(table, [lab(a) for a in range(size)], f"D_{n}", check=False)

    @classmethod
    def symmetric(cls, n):
        perms = list(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
        labels = ["[" + ",".join(map(str, p)) + "]" for p in perms]
        return cls(table, labels, f"S_{n}", check=False)

    @classmethod
    def direct_product(cls, G, H):
        m = H.order
        size = G.order * m
        table = [[G.mul(a // m, b // m) * m + H.mul(a % m, b % m) for b in range(size)]
                 for a in range(size)]
        labels = [f"({G.label(a // m)},{H.label(a % m)})" for a in range(size)]
        return cls(table, labels, f"{G.name}x{H.name}", check=False)

    def pair(self, a, b, H):
        """Index of (a, b) in ``direct_product(self, H)``."""
        return a * H.order + b


def _check_group_table(table, seed=0):
    n = len(table)
    if n == 0:
        raise ValueError("empty table")
    for row in table:
        if len(row) != n or sorted(row) != list(range(n)):
            raise ValueError("table rows must be permutations of the elements")
    for j in range(n):
        if sorted(table[i][j] for i in range(n)) != list(range(n)):
            raise ValueError("table columns must be permutations of the elements")
    ident = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not ident:
        raise ValueError("table has no two-sided identity")
    if n <= 16:
        triples = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(seed)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(10_000))
    for a, b, c in triples:
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise ValueError(f"table is not associative at {(a, b, c)}")


def subgroup_closure(S, G):
    """Smallest subgroup of the finite group G containing S."""
    S = list(S)
    span = {G.identity}
    frontier = deque([G.identity])
    while frontier:
        x = frontier.popleft()
        for s in S:
            y = G.mul(x, s)
            if y not in span:
                span.add(y)
                frontier.append(y)
    return span


def automorphisms(G, bound=16):
    """All automorphisms of a finite group, as lists ``phi[g]``."""
    if G.order > bound:
        raise GroupTooLarge(f"|G| = {G.order} exceeds the automorphism bound {bound}")
    gens = G.generating_set()
    orders = [G.element_order(g) for g in gens]
    candidates = [[h for h in range(G.order) if G.element_order(h) == o] for o in orders]
    out = []
    for images in itertools.product(*candidates):
        phi = _extend_hom(G, gens, images)
        if phi is not None and len(set(phi)) == G.order:
            out.append(phi)
    out.sort()
    return out


def _extend_hom(G, gens, images):
    """Extend gens -> images to a homomorphism G -> G, or None."""
    phi = {G.identity: G.identity}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        for g, h in zip(gens, images):
            y = G.mul(x, g)
            val = G.mul(phi[x], h)
            if y in phi:
                if phi[y] != val:
                    return None
            else:
                phi[y] = val
                queue.append(y)
    result = [phi[g] for g in range(G.order)]
    for a in range(G.order):
        for b in range(G.order):
            if result[G.mul(a, b)] != G.mul(result[a], result[b]):
                return None
    return result


# ---------------------------------------------------------- abelian -------

class FgAbelianGroup(Group):
    """Z^rank + Z_d1 + ... + Z_dk with d1 | d2 | ... (all > 1).

    Elements are tuples: free coordinates first, then torsion coordinates
    reduced into [0, d).
    """

    def __init__(self, rank=0, torsion=()):
        tors = linalg._divisor_chain([d for d in torsion if d != 1])
        if any(d <= 0 for d in tors):
            raise ValueError("torsion coefficients must be positive")
        self.rank = rank
        self.torsion = tuple(tors)
        self.identity = (0,) * (rank + len(self.torsion))
        self.is_finite = rank == 0
        self.order = None
        if self.is_finite:
            self.order = 1
            for d in self.torsion:
                self.order *= d

    def __repr__(self):
        return f"FgAbelianGroup({self.describe()})"

    def __eq__(self, other):
        return (isinstance(other, FgAbelianGroup) and self.rank == other.rank
                and self.torsion == other.torsion)

    def __hash__(self):
        return hash((self.rank, self.torsion))

    def describe(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts += [f"Z_{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "1"

    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    def normalize(self, vec):
        vec = tuple(vec)
        r = self.rank
        return vec[:r] + tuple(x % d for x, d in zip(vec[r:], self.torsion))

    def mul(self, a, b):
        return self.normalize(x + y for x, y in zip(a, b))

    def inv(self, a):
        return self.normalize(-x for x in a)

    def free_part(self, a):
        return a[:self.rank]

    def elements(self):
        if not self.is_finite:
            raise ValueError("infinite group")
        return [tuple(t) for t in itertools.product(*(range(d) for d in self.torsion))]

    def label(self, a):
        if len(a) == 1:
            return str(a[0])
        return "(" + ",".join(map(str, a)) + ")"

    def parse(self, literal):
        if isinstance(literal, int):
            vec = (literal,)
        elif isinstance(literal, (list, tuple)):
            vec = tuple(int(x) for x in literal)
        else:
            text = str(literal).strip().strip("()[]")
            try:
                vec = tuple(int(x) for x in text.split(",") if x.strip())
            except ValueError:
                raise ParseError(f"bad abelian group element {literal!r}") from None
        if len(vec) != len(self.identity):
            raise ParseError(f"{literal!r} has the wrong length for {self.describe()}")
        return self.normalize(vec)

    def to_finite(self):
        """(FiniteGroup, tuple -> index, index -> tuple) for a finite group."""
        elems = self.elements()
        index = {e: i for i, e in enumerate(elems)}
        table = [[index[self.mul(a, b)] for b in elems] for a in elems]
        labels = [self.label(e) for e in elems]
        G = FiniteGroup(table, labels, self.describe(), check=False)
        return G, index.__getitem__, elems.__getitem__

    def generated_is_everything(self, vectors):
        """Do the given elements generate the whole group?"""
        n = len(self.identity)
        rows = [list(v) for v in vectors]
        for i, d in enumerate(self.torsion):
            row = [0] * n
            row[self.rank + i] = d
            rows.append(row)
        if n == 0:
            return True
        factors = linalg.invariant_factors_dense(rows) if rows else []
        return len(factors) == n and all(f == 1 for f in factors)


Z = FgAbelianGroup(1)


# ------------------------------------------------------------- words ------

Word = tuple  # of (generator, +1 | -1)


def reduce_word(w):
    out = []
    for g, e in w:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def inverse_word(w):
    return tuple((g, -e) for g, e in reversed(w))


def cyclic_reduce(w):
    w = list(reduce_word(w))
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return tuple(w)


def letter(g, e=1):
    return ((g, 1),) * e if e >= 0 else ((g, -1),) * (-e)


def exponent_sums(w, generators):
    pos = {g: i for i, g in enumerate(generators)}
    out = [0] * len(generators)
    for g, e in w:
        if g not in pos:
            raise UnknownGenerator(f"unknown generator {g!r}")
        out[pos[g]] += e
    return out


def format_word(w):
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        g, e = w[i]
        j = i
        while j < len(w) and w[j] == (g, e):
            j += 1
        k = (j - i) * e
        parts.append(g if k == 1 else f"{g}^{k}")
        i = j
    return " ".join(parts)


def _canonical_relator(w):
    """Representative of w up to cyclic rotation and inversion."""
    if not w:
        return w
    forms = []
    for v in (w, inverse_word(w)):
        for k in range(len(v)):
            forms.append(v[k:] + v[:k])
    return min(forms)


_TOKEN = re.compile(r"([A-Za-z_][A-Za-z0-9_.]*?)(?:\^(-?\d+))?")
_LETTER = re.compile(r"([A-Za-z])(?:\^(-?\d+))?")


def parse_word(text, generators):
    """Parse ``a b^-1 c^2``; juxtaposition ``ab^-1`` works for one-letter names."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    gens = set(generators)
    single = all(len(g) == 1 for g in generators)
    out = []
    for token in re.split(r"[\s*]+", text):
        if not token or token == "1":
            continue
        m = _TOKEN.fullmatch(token)
        if m and m.group(1) in gens:
            out.extend(letter(m.group(1), int(m.group(2) or 1)))
            continue
        if single:
            pos = 0
            while pos < len(token):
                m = _LETTER.match(token, pos)
                if not m:
                    raise ParseError(f"bad word token {token!r}")
                if m.group(1) not in gens:
                    raise UnknownGenerator(f"unknown generator {m.group(1)!r}")
                out.extend(letter(m.group(1), int(m.group(2) or 1)))
                pos = m.end()
            continue
        if m:
            raise UnknownGenerator(f"unknown generator {m.group(1)!r}")
        raise ParseError(f"bad word token {token!r}")
    return tuple(out)


@dataclass(frozen=True)
class GroupPresentation:
    generators: tuple
    relators: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(tuple(r) for r in self.relators))
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        gens = set(self.generators)
        for r in self.relators:
            for g, e in r:
                if g not in gens:
                    raise UnknownGenerator(f"relator uses undeclared generator {g!r}")
                if e not in (1, -1):
                    raise ValueError("word letters must have exponent +1 or -1")

    def __str__(self):
        rels = ", ".join(format_word(r) for r in self.relators)
        gens = ", ".join(self.generators)
        return f"<{gens} | {rels}>"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if not (text.startswith("<") and text.endswith(">")):
            raise ParseError("presentation must look like <a, b | r1, r2>")
        body = text[1:-1]
        if "|" in body:
            gpart, rpart = body.split("|", 1)
        else:
            gpart, rpart = body, ""
        gens = [g.strip() for g in gpart.split(",") if g.strip()]
        for g in gens:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_.]*", g):
                raise ParseError(f"bad generator name {g!r}")
        rels = [parse_word(r, gens) for r in rpart.split(",") if r.strip()]
        try:
            return cls(tuple(gens), tuple(rels))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def relator_matrix(self):
        return [exponent_sums(r, self.generators) for r in self.relators]

    def total_length(self):
        return sum(len(r) for r in self.relators)


def evaluate(word, assignment, G):
    """Left-to-right product of the images of the letters."""
    acc = G.identity
    for g, e in word:
        if g not in assignment:
            raise UnknownGenerator(f"no image for generator {g!r}")
        x = assignment[g]
        acc = G.mul(acc, x if e == 1 else G.inv(x))
    return acc


# ------------------------------------------------------ abelianization ----

@dataclass
class Abelianization:
    presentation: GroupPresentation
    group: FgAbelianGroup
    _v: list = field(repr=False)
    _torsion_cols: list = field(repr=False)
    _free_cols: list = field(repr=False)

    def project_vector(self, vec):
        n = len(vec)
        y = [sum(vec[k] * self._v[k][j] for k in range(n)) for j in range(n)]
        free = tuple(y[j] for j in self._free_cols)
        tors = tuple(y[j] % d for j, d in self._torsion_cols)
        return free + tors

    def project(self, word):
        return self.project_vector(exponent_sums(word, self.presentation.generators))

    def __call__(self, word):
        return self.project(word)


def abelianization(P):
    gens = P.generators
    n = len(gens)
    mat = P.relator_matrix()
    _, d, v = linalg.smith_normal_form(mat, ncols=n)
    diag = [d[i][i] if i < len(d) else 0 for i in range(n)]
    torsion_cols = [(j, x) for j, x in enumerate(diag) if x > 1]
    free_cols = [j for j, x in enumerate(diag) if x == 0]
    group = FgAbelianGroup(len(free_cols), [x for _, x in torsion_cols])
    return Abelianization(P, group, v, torsion_cols, free_cols)


def has_infinite_order_abelian_certificate(word, P, ab=None):
    ab = ab or abelianization(P)
    img = ab.project(word)
    return Truth.YES if any(img[:ab.group.rank]) else Truth.UNKNOWN


# ---------------------------------------------------------- simplify ------

@dataclass
class Simplification:
    original: GroupPresentation
    presentation: GroupPresentation
    kind: str  # "trivial", "cyclic", "free", "abelian", "unknown"
    images: dict  # original generator -> word in the simplified generators
    abelian: FgAbelianGroup = None
    free_rank: int = None
    steps: int = 0

    @property
    def verdict(self):
        if self.kind == "trivial":
            return "TrivialGroup"
        if self.kind == "unknown":
            return "Unknown"
        return f"IsomorphicTo({self.describe()})"

    def describe(self):
        if self.kind == "trivial":
            return "1"
        if self.kind == "free":
            return "Z" if self.free_rank == 1 else f"F_{self.free_rank}"
        if self.kind in ("cyclic", "abelian"):
            return self.abelian.describe()
        return "?"

    @property
    def is_trivial(self):
        return self.kind == "trivial"

    @property
    def is_known(self):
        return self.kind != "unknown"

    @property
    def is_finite(self):
        if self.kind == "trivial":
            return Truth.YES
        if self.kind in ("cyclic", "abelian"):
            return Truth.of(self.abelian.is_finite)
        if self.kind == "free":
            return Truth.NO
        return Truth.UNKNOWN

    def rewrite(self, word):
        out = []
        for g, e in word:
            img = self.images[g]
            out.extend(img if e == 1 else inverse_word(img))
        return reduce_word(out)


def _substitute(w, g, expr):
    inv = inverse_word(expr)
    out = []
    for h, e in w:
        if h == g:
            out.extend(expr if e == 1 else inv)
        else:
            out.append((h, e))
    return reduce_word(out)


def _normalize_relators(rels):
    seen = set()
    out = []
    for r in rels:
        r = cyclic_reduce(r)
        if not r:
            continue
        key = _canonical_relator(r)
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out


def simplify(P, budget=2000):
    """Bounded Tietze simplification with a recognition step.

    Eliminates generators that occur exactly once in some relator (shortest
    relator first), keeps relators cyclically reduced and deduplicated up to
    rotation and inversion, then recognizes the trivial group, cyclic
    groups, free groups and groups whose relators contain every pairwise
    commutator.  Anything else is reported as unknown.
    """
    gens = list(P.generators)
    rels = _normalize_relators(P.relators)
    images = {g: letter(g) for g in gens}
    steps = 0
    while steps < budget:
        best = None
        for ri, r in enumerate(rels):
            counts = {}
            for g, _ in r:
                counts[g] = counts.get(g, 0) + 1
            for pos, (g, e) in enumerate(r):
                if counts[g] == 1:
                    occurrences = sum(1 for s in rels for h, _ in s if h == g)
                    cost = (len(r), occurrences * (len(r) - 1))
                    if best is None or cost < best[0]:
                        best = (cost, ri, pos)
                    break
        if best is None:
            break
        (_, growth), ri, pos = best
        total = sum(len(r) for r in rels)
        if growth > max(4 * total, 400):
            break
        r = rels[ri]
        g, e = r[pos]
        rest = r[pos + 1:] + r[:pos]  # r rotated = g^e rest
        expr = inverse_word(rest) if e == 1 else reduce_word(rest)
        rels = [_substitute(s, g, expr) for k, s in enumerate(rels) if k != ri]
        rels = _normalize_relators(rels)
        gens.remove(g)
        for h in images:
            images[h] = _substitute(images[h], g, expr)
        steps += 1

    result = GroupPresentation(tuple(gens), tuple(rels))
    before = abelianization(P).group
    after = abelianization(result).group
    assert before == after, "simplification changed the abelianization"

    kind = "unknown"
    free_rank = None
    if not gens:
        kind = "trivial"
    elif len(gens) == 1:
        n = 0
        for r in rels:
            n = gcd(n, abs(sum(e for _, e in r)))
        if n == 1:
            kind = "trivial"
        elif n == 0:
            kind, free_rank = "free", 1
        else:
            kind = "cyclic"
    elif not rels:
        kind, free_rank = "free", len(gens)
    elif _commutators_present(gens, rels):
        kind = "abelian"
        if after.is_trivial():
            kind = "trivial"
    return Simplification(P, result, kind, images, after, free_rank, steps)


def _commutators_present(gens, rels):
    keys = {_canonical_relator(r) for r in rels}
    for a, b in itertools.combinations(gens, 2):
        comm = ((a, 1), (b, 1), (a, -1), (b, -1))
        if _canonical_relator(comm) not in keys:
            return False
    return True


def word_is_trivial(word, P, simp=None, ab=None):
    """Is the word the identity of the presented group?  (sound, incomplete)"""
    if not reduce_word(word):
        return Truth.YES
    ab = ab or abelianization(P)
    if any(ab.project(word)):
        return Truth.NO
    simp = simp or simplify(P)
    rewritten = simp.rewrite(word)
    if not rewritten:
        return Truth.YES
    if simp.kind in ("trivial", "cyclic", "abelian"):
        return Truth.YES  # abelian image already zero
    if simp.kind == "free":
        return Truth.NO
    return Truth.UNKNOWN


@dataclass
class FiniteRealization:
    group: FiniteGroup
    to_element: object  # word -> element index

    def __call__(self, word):
        return self.to_element(word)


def finite_realization(P, simp=None):
    """A finite group isomorphic to <P> with a word evaluator, when certified.

    Only certified-abelian finite groups are realized, through the
    abelianization map (an isomorphism in that case).
    """
    simp = simp or simplify(P)
    if simp.kind not in ("trivial", "cyclic", "abelian"):
        return None
    ab = abelianization(P)
    if not ab.group.is_finite:
        return None
    G, index, _ = ab.group.to_finite()
    return FiniteRealization(G, lambda w: index(ab.project(w)))


class PresentedGroup(Group):
    """Elements are freely reduced words over a presentation."""

    def __init__(self, presentation):
        self.presentation = presentation
        self.identity = ()
        self._ab = None
        self._simp = None

    def __repr__(self):
        return f"PresentedGroup({self.presentation})"

    @property
    def abelianization(self):
        if self._ab is None:
            self._ab = abelianization(self.presentation)
        return self._ab

    @property
    def simplification(self):
        if self._simp is None:
            self._simp = simplify(self.presentation)
        return self._simp

    def mul(self, a, b):
        return reduce_word(tuple(a) + tuple(b))

    def inv(self, a):
        return inverse_word(a)

    def equal(self, a, b):
        return word_is_trivial(self.mul(a, self.inv(b)), self.presentation,
                               self.simplification, self.abelianization)

    def label(self, a):
        return format_word(a)

    def parse(self, literal):
        return reduce_word(parse_word(str(literal), self.presentation.generators))


# ----------------------------------------------------------- literals ------

def parse_group(literal):
    """Group literals: Z, Z_n, Z^k, products like Z x Z_2, S_n, D_n, or <...>."""
    text = str(literal).strip()
    if text.startswith("<"):
        return PresentedGroup(GroupPresentation.parse(text))
    if text == "Z":
        return FgAbelianGroup(1)
    parts = re.split(r"\s*x\s*", text)
    if len(parts) > 1 and all(re.fullmatch(r"Z(\^\d+|_\d+)?", p) for p in parts):
        rank, tors = 0, []
        for p in parts:
            if p == "Z":
                rank += 1
            elif p.startswith("Z^"):
                rank += int(p[2:])
            else:
                tors.append(int(p[2:]))
        return FgAbelianGroup(rank, tors)
    m = re.fullmatch(r"Z\^(\d+)", text)
    if m:
        return FgAbelianGroup(int(m.group(1)))
    m = re.fullmatch(r"([ZSD])_(\d+)", text)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if n < 1:
            raise ParseError(f"bad group literal {text!r}")
        if kind == "Z":
            return FiniteGroup.cyclic(n)
        if kind == "S":
            return FiniteGroup.symmetric(n)
        return FiniteGroup.dihedral(n)
    raise ParseError(f"unknown group literal {text!r}")


def group_literal(G):
    if isinstance(G, FiniteGroup):
        return G.name
    if isinstance(G, FgAbelianGroup):
        if not G.torsion:
            return "Z" if G.rank == 1 else f"Z^{G.rank}"
        if G.rank == 0 and len(G.torsion) == 1:
            return f"Z^0 x Z_{G.torsion[0]}"  # plain Z_n would read as a table group
        return G.describe()
    if isinstance(G, PresentedGroup):
        return str(G.presentation)
    raise TypeError(G)
