"""Group constructors and the textual group-spec language.

Grammar::

    spec := tag ":" params | "prod(" spec "," spec ")" | "perm:" degree ":" gens

with tags ``S:n``, ``A:n``, ``C:n``, ``D:n``, ``Q:8``, ``F:p:d``, ``PSL2:q``,
``PSL3:3`` and ``M:n``.  ``gens`` is a ``;``-separated list of cycle strings.
Every constructor checks the order of the group it built against the closed
form for that family.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from math import factorial, gcd
from pathlib import Path

from .errors import BadSpec, OrderMismatch, PermSolvError, UnsupportedParameter
from .fields import field
from .group import PermGroup
from .numtheory import is_prime_power, isprime, primitive_root
from .perm import Permutation, parse_perm

__all__ = [
    "GroupSpec",
    "parse_spec",
    "format_spec",
    "build",
    "expected_order",
    "symmetric",
    "alternating",
    "cyclic",
    "dihedral",
    "quaternion",
    "frobenius",
    "psl2",
    "psl3_3",
    "mathieu",
    "direct_product",
    "load_manifest",
    "default_manifest",
    "EXTENDED_MATHIEU",
]

EXTENDED_MATHIEU = (23, 24)
_MATHIEU_ORDERS = {11: 7920, 12: 95040, 22: 443520, 23: 10200960, 24: 244823040}

# Standard generators as distributed with the GAP primitive-groups library.
_MATHIEU_GENS = {
    11: ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"],
    12: [
        "(1,2,3,4,5,6,7,8,9,10,11)",
        "(3,7,11,8)(4,10,5,6)",
        "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)",
    ],
    22: [
        "(1,2,3,4,5,6,7,8,9,10,11)(12,13,14,15,16,17,18,19,20,21,22)",
        "(1,4,5,9,3)(2,8,10,7,6)(12,15,16,20,14)(13,19,21,18,17)",
        "(1,21)(2,10,8,6)(3,13,4,17)(5,19,9,18)(11,22)(12,14,16,20)",
    ],
    23: [
        "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
        "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
    ],
    24: [
        "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23)",
        "(3,17,10,7,9)(4,13,14,19,5)(8,18,11,12,23)(15,20,22,21,16)",
        "(1,24)(2,23)(3,12)(4,16)(5,18)(6,10)(7,20)(8,14)(9,21)(11,17)(13,22)(15,19)",
    ],
}


@dataclass(frozen=True)
class GroupSpec:
    tag: str
    params: tuple = ()
    children: tuple = ()
    gens: tuple = ()

    def __str__(self):
        return format_spec(self)


# ------------------------------------------------------------------ parsing

_INT = re.compile(r"[0-9]+$")


def _ints(parts, text, count):
    if len(parts) != count or not all(_INT.match(p) for p in parts):
        raise BadSpec(f"expected {count} integer parameter(s) in {text!r}")
    return tuple(int(p) for p in parts)


def _split_top(body, text):
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise BadSpec(f"unbalanced parentheses in {text!r}")
        elif ch == "," and depth == 0:
            return body[:i], body[i + 1 :]
    raise BadSpec(f"prod needs two comma-separated specs in {text!r}")


def parse_spec(text):
    """Parse a group spec string into a ``GroupSpec``."""
    if not isinstance(text, str):
        raise BadSpec("spec must be a string")
    s = text.strip()
    if not s:
        raise BadSpec("empty spec")
    if s.startswith("prod(") and s.endswith(")"):
        left, right = _split_top(s[5:-1], text)
        return GroupSpec("prod", children=(parse_spec(left), parse_spec(right)))
    if s.startswith("perm:"):
        rest = s[5:]
        deg_text, sep, gens_text = rest.partition(":")
        if not sep or not _INT.match(deg_text):
            raise BadSpec(f"expected perm:degree:gens in {text!r}")
        degree = int(deg_text)
        if degree < 1:
            raise BadSpec("degree must be positive")
        try:
            gens = tuple(
                parse_perm(g.strip(), degree) for g in gens_text.split(";") if g.strip()
            )
        except PermSolvError as exc:
            raise BadSpec(f"bad generator in {text!r}: {exc}") from exc
        if not gens:
            raise BadSpec("perm spec needs at least one generator")
        return GroupSpec("perm", (degree,), gens=gens)
    tag, _, rest = s.partition(":")
    parts = rest.split(":") if rest else []
    if tag in ("S", "A", "C", "D", "Q", "PSL2", "PSL3", "M"):
        return GroupSpec(tag, _ints(parts, text, 1))
    if tag == "F":
        return GroupSpec(tag, _ints(parts, text, 2))
    raise BadSpec(f"unknown group tag in {text!r}")


def format_spec(spec):
    if spec.tag == "prod":
        return f"prod({format_spec(spec.children[0])},{format_spec(spec.children[1])})"
    if spec.tag == "perm":
        return f"perm:{spec.params[0]}:" + ";".join(str(g) for g in spec.gens)
    return ":".join([spec.tag, *map(str, spec.params)])


# ------------------------------------------------------------------ orders


def expected_order(spec, extended=False):
    if isinstance(spec, str):
        spec = parse_spec(spec)
    t, ps = spec.tag, spec.params
    if t == "S":
        return factorial(ps[0])
    if t == "A":
        return max(1, factorial(ps[0]) // 2)
    if t == "C":
        return ps[0]
    if t == "D":
        return 2 * ps[0]
    if t == "Q":
        return 8
    if t == "F":
        return ps[0] * ps[1]
    if t == "PSL2":
        q = ps[0]
        return q * (q * q - 1) // gcd(2, q - 1)
    if t == "PSL3":
        return 5616
    if t == "M":
        return _MATHIEU_ORDERS[ps[0]]
    if t == "prod":
        a, b = (expected_order(c) for c in spec.children)
        return None if a is None or b is None else a * b
    return None  # perm specs have no closed form


# ------------------------------------------------------------------ families


def _require(cond, msg):
    if not cond:
        raise UnsupportedParameter(msg)


def _group(gens, degree, name):
    gens = [parse_perm(g, degree) if isinstance(g, str) else g for g in gens]
    return PermGroup(gens or [Permutation.identity(degree)], degree, name=name)


def symmetric(n):
    _require(n >= 1, "S:n needs n >= 1")
    if n == 1:
        return _group([], 1, "S:1")
    gens = [Permutation.from_cycles([list(range(1, n + 1))], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([[1, 2]], n))
    return _group(gens, n, f"S:{n}")


def alternating(n):
    _require(n >= 1, "A:n needs n >= 1")
    if n < 3:
        return _group([], n, f"A:{n}")
    gens = [Permutation.from_cycles([[1, 2, 3]], n)]
    if n > 3:
        tail = list(range(3, n + 1)) if n % 2 else list(range(2, n + 1))
        gens.append(Permutation.from_cycles([tail], n))
    return _group(gens, n, f"A:{n}")


def cyclic(n):
    _require(n >= 1, "C:n needs n >= 1")
    if n == 1:
        return _group([], 1, "C:1")
    return _group([Permutation.from_cycles([list(range(1, n + 1))], n)], n, f"C:{n}")


def dihedral(n):
    """Dihedral group of order 2n acting on the n vertices of a polygon."""
    _require(n >= 3, "D:n needs n >= 3")
    rot = Permutation.from_cycles([list(range(1, n + 1))], n)
    refl = Permutation([1] + [n + 2 - i for i in range(2, n + 1)])
    return _group([rot, refl], n, f"D:{n}")


def quaternion():
    """Q8 in its right regular representation on 8 points."""
    # elements s*u with s in {+1,-1}, u in {1,i,j,k}; encoded as 4*(s<0) + u
    table = {
        (1, 1): (1, 1), (1, 2): (1, 2), (1, 3): (1, 3), (1, 4): (1, 4),
        (2, 1): (1, 2), (2, 2): (-1, 1), (2, 3): (1, 4), (2, 4): (-1, 3),
        (3, 1): (1, 3), (3, 2): (-1, 4), (3, 3): (-1, 1), (3, 4): (1, 2),
        (4, 1): (1, 4), (4, 2): (1, 3), (4, 3): (-1, 2), (4, 4): (-1, 1),
    }  # (u, v) -> u*v for u, v in 1=1, 2=i, 3=j, 4=k

    def mul(a, b):
        sa, ua = (-1 if a > 4 else 1), (a - 1) % 4 + 1
        sb, ub = (-1 if b > 4 else 1), (b - 1) % 4 + 1
        s, u = table[(ua, ub)]
        return u + (4 if sa * sb * s < 0 else 0)

    gens = [Permutation([mul(x, g) for x in range(1, 9)]) for g in (2, 3)]
    return _group(gens, 8, "Q:8")


def frobenius(p, d):
    """Affine group x -> a x + b on GF(p) with a in the order-d subgroup."""
    _require(isprime(p), f"F:p:d needs p prime, got {p}")
    _require(d >= 1 and (p - 1) % d == 0, f"F:{p}:{d}: {d} does not divide {p - 1}")
    w = pow(primitive_root(p), (p - 1) // d, p)
    shift = Permutation([(i + 1) % p + 1 for i in range(p)])
    gens = [shift]
    if d > 1:
        gens.append(Permutation([(w * i) % p + 1 for i in range(p)]))
    return _group(gens, p, f"F:{p}:{d}")


def _mobius_perm(F, fn):
    """Permutation of the q+1 projective points (q = infinity) induced by fn."""
    return Permutation([fn(v) + 1 for v in range(F.q + 1)])


def psl2(q):
    """PSL(2, q) on the projective line."""
    _require(is_prime_power(q) and 4 <= q <= 128, f"PSL2:q needs a prime power 4 <= q <= 128, got {q}")
    from .structure import derived_series

    F = field(q)
    inf = q
    lam = F.generator
    minus_one = F.neg[1]

    def translate(v):
        return inf if v == inf else F.add(v, 1)

    def scale(v):
        return inf if v == inf else F.mul(lam, v)

    def invert(v):
        if v == inf:
            return 0
        if v == 0:
            return inf
        return F.mul(int(minus_one), int(F.inv[v]))

    gens = [_mobius_perm(F, f) for f in (translate, scale, invert)]
    G = PermGroup(gens, q + 1, name=f"PSL2:{q}")
    if q % 2:
        series = derived_series(G)
        D = series.terms[1]
        G = PermGroup(D.generators, q + 1, name=f"PSL2:{q}")
        G._chain = D.chain
    _check_order(G, expected_order(GroupSpec("PSL2", (q,))))
    # 2-transitivity: transitive with a transitive point stabilizer
    assert G.is_transitive(), "PSL2 must be transitive"
    assert len(G.chain.levels) >= 2 and len(G.chain.levels[1].orbit) == q, "PSL2 must be 2-transitive"
    return G


def _projective_points(n, p):
    pts = []
    for code in range(p**n):
        v = tuple((code // p**i) % p for i in reversed(range(n)))
        nz = next((c for c in v if c), 0)
        if nz == 1:
            pts.append(v)
    return pts


def psl3_3():
    """PSL(3, 3) = SL(3, 3) on the 13 points of the projective plane."""
    p = 3
    pts = _projective_points(3, p)
    index = {v: i for i, v in enumerate(pts)}

    def normalize(v):
        nz = next(c for c in v if c)
        inv = pow(nz, -1, p)
        return tuple((c * inv) % p for c in v)

    gens = []
    for i in range(3):
        for j in range(3):
            if i != j:
                # transvection e_j -> e_j + e_i, i.e. v_i += v_j
                imgs = []
                for v in pts:
                    w = list(v)
                    w[i] = (w[i] + w[j]) % p
                    imgs.append(index[normalize(w)] + 1)
                gens.append(Permutation(imgs))
    return _group(gens, len(pts), "PSL3:3")


def mathieu(n, extended=False):
    if n not in _MATHIEU_GENS:
        raise UnsupportedParameter(f"no Mathieu group of degree {n}")
    if n in EXTENDED_MATHIEU and not extended:
        raise UnsupportedParameter(f"M:{n} requires the extended flag")
    G = _group(_MATHIEU_GENS[n], n, f"M:{n}")
    _check_order(G, _MATHIEU_ORDERS[n])
    return G


def direct_product(G, H, name=None):
    """G x H acting on disjoint point sets, G first."""
    d = G.degree + H.degree
    gens = []
    for g in G.generators:
        gens.append(Permutation(list(g.images) + list(range(G.degree + 1, d + 1))))
    for h in H.generators:
        gens.append(Permutation(list(range(1, G.degree + 1)) + [v + G.degree for v in h.images]))
    return PermGroup(gens, d, name=name)


def _check_order(G, expected):
    got = G.order()
    if expected is not None and got != expected:
        raise OrderMismatch(f"{G.name}: built order {got}, expected {expected}")


def build(spec, extended=False):
    """Build the permutation group described by ``spec`` (text or GroupSpec)."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    t, ps = spec.tag, spec.params
    name = format_spec(spec)
    if t == "S":
        G = symmetric(ps[0])
    elif t == "A":
        G = alternating(ps[0])
    elif t == "C":
        G = cyclic(ps[0])
    elif t == "D":
        G = dihedral(ps[0])
    elif t == "Q":
        _require(ps[0] == 8, "only Q:8 is supported")
        G = quaternion()
    elif t == "F":
        G = frobenius(*ps)
    elif t == "PSL2":
        G = psl2(ps[0])
    elif t == "PSL3":
        _require(ps[0] == 3, "only PSL3:3 is supported")
        G = psl3_3()
    elif t == "M":
        G = mathieu(ps[0], extended=extended)
    elif t == "prod":
        G = direct_product(build(spec.children[0], extended), build(spec.children[1], extended))
    elif t == "perm":
        G = PermGroup(spec.gens, ps[0])
    else:  # pragma: no cover - parse_spec rejects unknown tags
        raise BadSpec(f"unknown tag {t}")
    G.name = name
    _check_order(G, expected_order(spec))
    return G


# ------------------------------------------------------------------ manifests


def _parse_manifest_text(text):
    specs = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            parse_spec(line)  # validate early
            specs.append(line)
    return specs


def load_manifest(path):
    return _parse_manifest_text(Path(path).read_text())


def default_manifest():
    text = resources.files("permsolv").joinpath("data/default.txt").read_text()
    return _parse_manifest_text(text)
