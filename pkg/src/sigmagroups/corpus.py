"""Group constructors, the built-in corpus and the group file loader."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import yaml

from .perm import (
    GroupError,
    Permutation,
    PermGroup,
    PermutationError,
    ResourceLimitError,
    group_from_generators,
    parse_cycles,
    symmetric_group,
)
from .sigma import is_prime


class CorpusError(GroupError, ValueError):
    pass


class GroupFileError(CorpusError):
    """Malformed group file; carries the 1-based line and column when known."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None, column: int | None = None):
        where = path or "<input>"
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")
        self.path, self.line, self.column = path, line, column


MAX_DEGREE = 200


def _check_degree(n: int) -> None:
    if n > MAX_DEGREE:
        raise ResourceLimitError(f"degree {n} exceeds constructor cap {MAX_DEGREE}")


# ---------------------------------------------------------------------------
# standard families


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("cyclic(n) needs n >= 1")
    _check_degree(n)
    return group_from_generators(n, [Permutation._raw(list(range(1, n)) + [0])] if n > 1 else [])


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order ``2n`` (symmetries of an n-gon for n >= 3)."""
    if n < 1:
        raise ValueError("dihedral(n) needs n >= 1")
    if n == 1:
        return cyclic(2)
    if n == 2:
        return group_from_generators(4, [Permutation._raw([1, 0, 2, 3]), Permutation._raw([0, 1, 3, 2])])
    _check_degree(n)
    rot = Permutation._raw(list(range(1, n)) + [0])
    ref = Permutation._raw([(-i) % n for i in range(n)])
    return group_from_generators(n, [rot, ref])


def symmetric(n: int) -> PermGroup:
    _check_degree(n)
    return symmetric_group(n)


def alternating(n: int) -> PermGroup:
    _check_degree(n)
    if n < 3:
        return group_from_generators(max(n, 1), [])
    gens = [Permutation._raw([(i + 1) % 3 if i < 3 else i for i in range(n)])]
    for k in range(3, n):
        img = list(range(n))
        img[0], img[1], img[k] = 1, k, 0
        gens.append(Permutation._raw(img))
    return group_from_generators(n, gens)


def quaternion8() -> PermGroup:
    """Regular representation of the quaternion group."""
    i = Permutation.from_cycles("(0 1 3 6)(2 5 7 4)", 8)
    j = Permutation.from_cycles("(0 2 3 7)(1 4 6 5)", 8)
    return group_from_generators(8, [i, j])


def direct_product(*groups: PermGroup) -> PermGroup:
    """External direct product acting on the disjoint union of the point sets."""
    degree = sum(G.degree for G in groups)
    _check_degree(degree)
    gens = []
    offset = 0
    for G in groups:
        for g in G.generators:
            img = list(range(degree))
            for a, b in enumerate(g):
                img[offset + a] = offset + b
            gens.append(Permutation._raw(img))
        offset += G.degree
    return group_from_generators(degree, gens)


def elementary_abelian(p: int, k: int) -> PermGroup:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k == 0:
        return cyclic(1)
    return direct_product(*[cyclic(p)] * k)


# ---------------------------------------------------------------------------
# semidirect products


def _extend_automorphism(P: PermGroup, images: Sequence[Permutation]) -> dict[Permutation, Permutation]:
    """Extend ``P.generators[i] -> images[i]`` to an automorphism of ``P``."""
    gens = P.generators
    if len(images) != len(gens):
        raise CorpusError("automorphism needs one image per generator")
    ident = P.identity()
    images = [Permutation(x) for x in images]
    if any(x not in P for x in images):
        raise CorpusError("automorphism image outside the base group")
    alpha = {ident: ident}
    frontier = [ident]
    for x in frontier:
        for g, a in zip(gens, images):
            y, b = x * g, alpha[x] * a
            if y in alpha:
                if alpha[y] != b:
                    raise CorpusError("action is not a homomorphism of the base group")
            else:
                alpha[y] = b
                frontier.append(y)
    if len(set(alpha.values())) != len(alpha):
        raise CorpusError("action is not injective on the base group")
    return alpha


def semidirect_on_regular(
    P: PermGroup,
    action: Sequence[Sequence[Permutation]],
    H: PermGroup | None = None,
    *,
    faithful: bool = True,
) -> PermGroup:
    """``P x| H`` with ``P`` acting on itself by right translation.

    ``action[j]`` lists the images of ``P.generators`` under the automorphism
    attached to the ``j``-th generator of ``H``.  With ``faithful`` the result
    has degree ``|P|``; otherwise ``H`` also acts on its own points, which
    makes the construction valid for any action (e.g. the trivial one).
    """
    elems = sorted(P.elements)
    pos = {x: i for i, x in enumerate(elems)}
    n = len(elems)
    autos = [_extend_automorphism(P, imgs) for imgs in action]
    hgens = list(H.generators) if H is not None else []
    if H is not None and len(hgens) != len(autos):
        raise CorpusError("need one automorphism per generator of H")
    extra = 0 if faithful or H is None else H.degree
    degree = n + extra
    _check_degree(degree)
    gens = []
    for g in P.generators:
        gens.append(Permutation._raw([pos[x * g] for x in elems] + list(range(n, degree))))
    acting = []
    for j, alpha in enumerate(autos):
        img = [pos[alpha[x]] for x in elems]
        if extra:
            img += [n + y for y in hgens[j]]
        acting.append(Permutation._raw(img))
    G = group_from_generators(degree, gens + acting)
    if H is not None:
        top = group_from_generators(degree, acting)
        if top.order != H.order:
            raise CorpusError(
                "action is not faithful" if faithful and top.order < H.order
                else "action does not define a homomorphism from H")
        assert G.order == P.order * H.order
    return G


def affine_group(p: int, matrices: Sequence[Sequence[Sequence[int]]]) -> PermGroup:
    """``F_p^k x| <matrices>`` acting on the ``p^k`` vectors (row vectors, ``v -> vM``)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    k = len(matrices[0]) if matrices else 1
    vectors = list(itertools.product(range(p), repeat=k))
    _check_degree(len(vectors))
    pos = {v: i for i, v in enumerate(vectors)}
    gens = []
    for axis in range(k):
        gens.append(Permutation._raw(
            [pos[tuple((v[i] + (i == axis)) % p for i in range(k))] for v in vectors]))
    for m in matrices:
        if len(m) != k or any(len(row) != k for row in m):
            raise CorpusError("matrices must be square of a common size")
        gens.append(Permutation(
            [pos[tuple(sum(v[i] * m[i][j] for i in range(k)) % p for j in range(k))] for v in vectors]))
    return group_from_generators(len(vectors), gens)


# ---------------------------------------------------------------------------
# corpus entries


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    group: PermGroup = field(compare=False)
    tags: frozenset[str] = frozenset()
    provenance: dict = field(default_factory=dict, compare=False)

    @property
    def order(self) -> int:
        return self.group.order

    def generator_strings(self) -> list[str]:
        return [g.cycle_string() for g in self.group.generators]


def _primitive_root_of_order(q: int, p: int) -> int:
    for w in range(2, p):
        if pow(w, q, p) == 1:
            return w
    raise CorpusError(f"no element of order {q} mod {p}")


def example_294_matrices(p: int = 7, q: int = 3, r: int = 2) -> tuple[list, list]:
    """Matrices of ``Q`` (order q) and ``R`` (order r) on ``F_p^r``.

    ``Q`` is diagonal with entries ``w^(a^i)`` where ``w`` has order ``q`` mod ``p``
    and ``a`` has order ``r`` mod ``q``; ``R`` permutes the coordinates
    cyclically.  Distinct eigenvalues permuted transitively by ``R`` make the
    module simple and faithful.
    """
    if not (is_prime(p) and is_prime(q) and is_prime(r) and p > q > r):
        raise CorpusError("need primes p > q > r")
    if (p - 1) % q or (q - 1) % r:
        raise CorpusError("need q | p-1 and r | q-1")
    w = _primitive_root_of_order(q, p)
    a = _primitive_root_of_order(r, q)
    Q = [[pow(w, pow(a, i, q), p) if i == j else 0 for j in range(r)] for i in range(r)]
    R = [[1 if j == (i + 1) % r else 0 for j in range(r)] for i in range(r)]
    return Q, R


def example_294(p: int = 7, q: int = 3, r: int = 2) -> CorpusEntry:
    """``P x| (Q x| R)`` with ``P = F_p^r`` a simple faithful module.

    The default triple gives order 294.  The provenance carries the matrices
    and the vector order used for the points.
    """
    Q, R = example_294_matrices(p, q, r)
    G = affine_group(p, [Q, R])
    expected = p ** r * q * r
    if G.order != expected:
        raise CorpusError(f"constructed order {G.order}, expected {expected}")
    name = "P_x_(Q_x_R)" if (p, q, r) == (7, 3, 2) else f"P_x_(Q_x_R)_{p}_{q}_{r}"
    return CorpusEntry(
        name, G, frozenset({"worked-example", "soluble", "module-example"}),
        {"constructor": "example_294", "p": p, "q": q, "r": r, "Q": Q, "R": R,
         "points": f"vectors of F_{p}^{r} in lexicographic order",
         "generators": "translations by the unit vectors, then Q, then R"})


def example_294_parts(entry: CorpusEntry) -> dict[str, PermGroup]:
    """Named subgroups of the order-294 group: P, Q, R, H = QR, PQ and L."""
    G = entry.group
    prov = entry.provenance
    r = prov["r"]
    gens = G.generators
    P = G.subgroup(gens[:r])
    Qg, Rg = gens[r], gens[r + 1]
    Qs = G.subgroup([Qg])
    Rs = G.subgroup([Rg])
    # eigenline of Q along the first coordinate axis
    L = G.subgroup([gens[0]])
    return {"P": P, "Q": Qs, "R": Rs, "H": G.subgroup([Qg, Rg]),
            "PQ": G.subgroup(list(gens[:r]) + [Qg]), "L": L}


def example_42() -> CorpusEntry:
    """``C_7 x| Aut(C_7)`` as the affine group of the line over ``F_7``."""
    G = affine_group(7, [[[3]]])
    return CorpusEntry("C7_x_Aut(C7)", G, frozenset({"worked-example", "soluble", "holomorph-example"}),
                       {"constructor": "affine_group", "p": 7, "matrices": [[[3]]]})


def _c(n):
    return cyclic(n)


def _semi_cyclic(p: int, q: int) -> PermGroup:
    """Non-abelian ``C_p x| C_q`` for ``q | p-1`` on ``p`` points."""
    return affine_group(p, [[[_primitive_root_of_order(q, p)]]])


def _c3_x_c4() -> PermGroup:
    return group_from_generators(7, [Permutation.from_cycles("(0 1 2)", 7),
                                     Permutation.from_cycles("(1 2)(3 4 5 6)", 7)])


def _sl23() -> PermGroup:
    """SL(2,3) acting on the eight non-zero vectors of F_3^2."""
    vecs = [v for v in itertools.product(range(3), repeat=2) if v != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}
    gens = []
    for m in ([[1, 1], [0, 1]], [[1, 0], [1, 1]]):
        gens.append(Permutation([pos[tuple(sum(v[i] * m[i][j] for i in range(2)) % 3 for j in range(2))]
                                 for v in vecs]))
    return group_from_generators(8, gens)


def _agl18() -> PermGroup:
    """``F_8 x| F_8^*``: translations and a Singer cycle of order 7."""
    # multiplication by x on F_2[x]/(x^3+x+1), as a matrix on coefficient rows
    return affine_group(2, [[[0, 1, 0], [0, 0, 1], [1, 1, 0]]])


def _builtin() -> list[tuple[str, callable, frozenset[str], dict]]:
    S = frozenset
    out = []
    for n in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 30):
        out.append((f"C{n}", lambda n=n: cyclic(n), S({"cyclic", "abelian", "nilpotent", "soluble"}),
                    {"constructor": "cyclic", "n": n}))
    for n in (3, 4, 5, 6, 7, 9, 10):
        tags = {"dihedral", "soluble"} | ({"nilpotent"} if n == 4 else set())
        out.append((f"D{2 * n}", lambda n=n: dihedral(n), S(tags), {"constructor": "dihedral", "n": n}))
    for n in (3, 4, 5):
        tags = {"symmetric"} | ({"soluble"} if n < 5 else set())
        out.append((f"S{n}", lambda n=n: symmetric(n), S(tags), {"constructor": "symmetric", "n": n}))
    for n in (4, 5):
        tags = {"alternating"} | ({"soluble"} if n < 5 else set())
        out.append((f"A{n}", lambda n=n: alternating(n), S(tags), {"constructor": "alternating", "n": n}))
    out.append(("Q8", quaternion8, S({"nilpotent", "soluble"}), {"constructor": "quaternion8"}))
    for p, k in ((2, 2), (2, 3), (3, 2), (2, 4), (5, 2)):
        out.append((f"E{p}^{k}", lambda p=p, k=k: elementary_abelian(p, k), S({"abelian", "nilpotent", "soluble"}),
                    {"constructor": "elementary_abelian", "p": p, "k": k}))
    products = [
        ("S3xC2", (symmetric, 3), (cyclic, 2), True),
        ("S3xC3", (symmetric, 3), (cyclic, 3), True),
        ("S3xC5", (symmetric, 3), (cyclic, 5), True),
        ("S3xC7", (symmetric, 3), (cyclic, 7), True),
        ("S3xS3", (symmetric, 3), (symmetric, 3), True),
        ("A4xC2", (alternating, 4), (cyclic, 2), True),
        ("A4xC3", (alternating, 4), (cyclic, 3), True),
        ("A4xC5", (alternating, 4), (cyclic, 5), True),
        ("S4xC2", (symmetric, 4), (cyclic, 2), True),
        ("S4xC3", (symmetric, 4), (cyclic, 3), True),
        ("D8xC3", (dihedral, 4), (cyclic, 3), True),
        ("Q8xC3", (lambda _: quaternion8(), 0), (cyclic, 3), True),
        ("A5xC2", (alternating, 5), (cyclic, 2), False),
    ]
    for name, (f, a), (g, b), soluble in products:
        out.append((name, lambda f=f, a=a, g=g, b=b: direct_product(f(a), g(b)),
                    S({"direct-product"} | ({"soluble"} if soluble else set())),
                    {"constructor": "direct_product", "factors": name.split("x")}))
    for p, q in ((7, 3), (5, 4), (13, 3), (11, 5)):
        out.append((f"C{p}_x_C{q}", lambda p=p, q=q: _semi_cyclic(p, q), S({"semidirect", "soluble"}),
                    {"constructor": "affine_group", "p": p, "acting_order": q}))
    out.append(("C3_x_C4", _c3_x_c4, S({"semidirect", "soluble"}),
                {"constructor": "generators", "generators": ["(0 1 2)", "(1 2)(3 4 5 6)"]}))
    out.append(("SL(2,3)", _sl23, S({"soluble"}), {"constructor": "matrix_action", "field": 3}))
    out.append(("AGL(1,8)", _agl18, S({"semidirect", "soluble"}), {"constructor": "affine_group", "p": 2, "k": 3}))
    out.append(("AGL(1,9)", lambda: affine_group(3, [[[0, 1], [1, 1]]]), S({"semidirect", "soluble"}),
                {"constructor": "affine_group", "p": 3, "matrices": [[[0, 1], [1, 1]]]}))
    out.append(("E3^2_x_C4", lambda: affine_group(3, [[[0, 1], [2, 0]]]), S({"semidirect", "soluble"}),
                {"constructor": "affine_group", "p": 3, "matrices": [[[0, 1], [2, 0]]]}))
    out.append(("E2^4_x_C5", lambda: affine_group(2, [[[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1]]]),
                S({"semidirect", "soluble"}), {"constructor": "affine_group", "p": 2, "k": 4}))
    out.append(("E5^2_x_C3", lambda: affine_group(5, [[[0, 1], [4, 4]]]), S({"semidirect", "soluble"}),
                {"constructor": "affine_group", "p": 5, "matrices": [[[0, 1], [4, 4]]]}))
    return out


@dataclass
class CorpusConfig:
    max_order: int = 200
    max_degree: int = MAX_DEGREE
    include_tags: frozenset[str] = frozenset()
    exclude_tags: frozenset[str] = frozenset()
    pinned_tags: frozenset[str] = frozenset()
    extra_dirs: tuple[str, ...] = ()


def _keep(entry: CorpusEntry, config: CorpusConfig) -> bool:
    if config.include_tags and not entry.tags & config.include_tags:
        return False
    if entry.tags & config.exclude_tags:
        return False
    if entry.tags & config.pinned_tags:
        return True
    return entry.order <= config.max_order and entry.group.degree <= config.max_degree


_CACHE: dict[str, CorpusEntry] = {}


def builtin_entry(name: str) -> CorpusEntry:
    """Look up a built-in corpus group by name (constructed once, then cached)."""
    if name not in _CACHE:
        if name == "P_x_(Q_x_R)":
            _CACHE[name] = example_294()
        elif name == "C7_x_Aut(C7)":
            _CACHE[name] = example_42()
        else:
            for n, make, tags, prov in _builtin():
                if n == name:
                    _CACHE[name] = CorpusEntry(n, make(), tags, prov)
                    break
            else:
                raise CorpusError(f"unknown corpus group {name!r}")
    return _CACHE[name]


def builtin_names() -> list[str]:
    return [n for n, *_ in _builtin()] + ["C7_x_Aut(C7)", "P_x_(Q_x_R)"]


def default_corpus(config: CorpusConfig | None = None) -> list[CorpusEntry]:
    """Built-in groups (plus any files in ``config.extra_dirs``), filtered by the
    config, deduplicated by ``(order, name)`` and sorted by that key."""
    config = config or CorpusConfig()
    entries = [builtin_entry(n) for n in builtin_names()]
    for d in config.extra_dirs:
        entries.extend(load_directory(d))
    seen = {}
    for e in entries:
        if _keep(e, config):
            seen.setdefault((e.order, e.name), e)
    return [seen[k] for k in sorted(seen)]


# ---------------------------------------------------------------------------
# group files


def _mark(node) -> tuple[int, int]:
    return node.start_mark.line + 1, node.start_mark.column + 1


def _parse_generator(node, degree: int, path: str | None) -> Permutation:
    line, col = _mark(node)
    if isinstance(node, yaml.ScalarNode):
        text = node.value
        try:
            return Permutation.from_cycles(parse_cycles(text), degree)
        except (PermutationError, ValueError) as exc:
            raise GroupFileError(f"bad cycle notation {text!r}: {exc}", path, line, col) from None
    if isinstance(node, yaml.SequenceNode):
        try:
            images = [int(x.value) for x in node.value]
        except (ValueError, AttributeError):
            raise GroupFileError("image list must contain integers", path, line, col) from None
        if len(images) != degree:
            raise GroupFileError(f"image list has length {len(images)}, expected degree {degree}", path, line, col)
        try:
            return Permutation(images)
        except PermutationError as exc:
            raise GroupFileError(str(exc), path, line, col) from None
    raise GroupFileError("generator must be an image list or a cycle string", path, line, col)


def parse_group_text(text: str, path: str | None = None, max_order: int | None = None) -> CorpusEntry:
    """Parse a group document (JSON or YAML) with ``name``, ``degree`` and ``generators``."""
    try:
        root = yaml.compose(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        raise GroupFileError(exc.problem or "syntax error", path,
                             mark.line + 1 if mark else None, mark.column + 1 if mark else None) from None
    if not isinstance(root, yaml.MappingNode):
        raise GroupFileError("expected a mapping with name, degree and generators", path, 1, 1)
    fields = {k.value: v for k, v in root.value}
    for key in ("degree", "generators"):
        if key not in fields:
            raise GroupFileError(f"missing field {key!r}", path, *_mark(root))
    dnode = fields["degree"]
    try:
        degree = int(dnode.value)
    except (TypeError, ValueError):
        raise GroupFileError("degree must be an integer", path, *_mark(dnode)) from None
    if degree < 1:
        raise GroupFileError("degree must be positive", path, *_mark(dnode))
    gnode = fields["generators"]
    if not isinstance(gnode, yaml.SequenceNode):
        raise GroupFileError("generators must be a list", path, *_mark(gnode))
    gens = [_parse_generator(n, degree, path) for n in gnode.value]
    name = fields["name"].value if "name" in fields else (Path(path).stem if path else "unnamed")
    tags = frozenset(str(t.value) for t in fields["tags"].value) if "tags" in fields else frozenset()
    G = group_from_generators(degree, gens, max_order=max_order)
    return CorpusEntry(str(name), G, tags | {"file"}, {"source": path or "<input>"})


def load_group(path: str | Path, max_order: int | None = None) -> CorpusEntry:
    path = Path(path)
    return parse_group_text(path.read_text(), str(path), max_order)


def load_directory(directory: str | Path) -> list[CorpusEntry]:
    d = Path(directory)
    files = sorted(p for p in d.iterdir() if p.suffix in (".json", ".yaml", ".yml", ".grp"))
    return [load_group(p) for p in files]


def resolve_group(source: str) -> CorpusEntry:
    """``corpus:NAME`` for a built-in group, otherwise a file path."""
    if source.startswith("corpus:"):
        return builtin_entry(source[len("corpus:"):])
    return load_group(source)
