"""Named generating functions over the two permutation classes, the
generic cluster engine for counting Motzkin words by factor occurrences,
and the brute-force distribution oracle they are all checked against.

Variable conventions: x always marks length.  Over 3412-avoiding
involutions, y marks inversions, z marks descents (or, in the
pattern-occurrence series, fixed points), w marks fixed points, t marks
pattern occurrences.  Over permutations avoiding 132 and consecutive 123,
y marks coinversions, z marks descents, t marks pattern occurrences.

Every series here is exact; the acceptance suite compares each one,
coefficient by coefficient, with exhaustive enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .errors import BoundExceededError
from .paths import (
    PATH_STATISTIC_NAMES,
    enumerate_motzkin,
    named_statistic,
    subword_count,
)
from .patterns import PatternSpec, enumerate_class, occurrences
from .permutations import (
    ENUMERATION_BOUND,
    Permutation,
    asc_count,
    coinv_count,
    des_count,
    fix_count,
    inv_count,
)
from .series import (
    SeriesRing,
    TruncatedSeries,
    continued_fraction,
    fixed_point_solve,
    monomial_substitute,
    solve_quadratic,
)

# ---------------------------------------------------------------------------
# joint inversion / descent / fixed-point distribution over I_n(3412)


def inv_des_fix_gf(order: int, method: str = "recurrence") -> TruncatedSeries:
    """Joint distribution of (inv, des, fix) over 3412-avoiding involutions,
    in variables (y, z, w).

    The coefficient of x^n is the polynomial summing y^inv z^des w^fix
    over the class at size n.  Two independent routes are provided: the
    first-return recurrence

        F = 1 + x w F + x^2 y z F + x^2 y z^2 (F(x y^2) - 1) F,

    where F(x y^2) substitutes x y^2 for x, and its unrolling as a
    continued fraction with levels

        b_i = -x y^(2i) w - x^2 y^(4i+1) z + x^2 y^(4i+1) z^2,
        c_i = x^2 y^(4i+1) z^2.
    """
    ring = SeriesRing(order, ("y", "z", "w"))
    if method == "recurrence":
        x, y, z, w = ring.x(), ring.var("y"), ring.var("z"), ring.var("w")
        one = ring.one()
        xy2 = x * y * y
        xw = x * w
        x2yz = x * x * y * z
        x2yz2 = x2yz * z

        def phi(f: TruncatedSeries) -> TruncatedSeries:
            return one + xw * f + x2yz * f + x2yz2 * (f.substitute("x", xy2) - one) * f

        return fixed_point_solve(phi, ring)
    if method == "continued-fraction":

        def b(i: int) -> TruncatedSeries:
            return (
                ring.monomial(-1, 1, y=2 * i, w=1)
                + ring.monomial(-1, 2, y=4 * i + 1, z=1)
                + ring.monomial(1, 2, y=4 * i + 1, z=2)
            )

        def c(i: int) -> TruncatedSeries:
            return ring.monomial(1, 2, y=4 * i + 1, z=2)

        return continued_fraction(b, c, ring)
    raise ValueError(f"unknown method {method!r}")


def weak_valley_gf(order: int) -> TruncatedSeries:
    """Motzkin paths by length and number of weak valleys (factors HH, HU,
    DH, DU), in the variable z.

    Derived from the descent distribution through the complementation
    G(x,z) = 1 + (F(xz, 1, 1/z, 1) - 1)/z, carried out at the coefficient
    level where the reciprocal provably cancels.
    """
    f = inv_des_fix_gf(order).evaluate(y=1, w=1)
    ring = f.ring
    twisted = monomial_substitute(
        f - ring.one(), ring, {"x": {"x": 1, "z": 1}, "z": {"z": -1}}
    )
    return ring.one() + twisted.shift_var("z", -1)


# ---------------------------------------------------------------------------
# consecutive patterns of length three over I_n(3412): series in (t, z)
# with t marking occurrences and z marking fixed points


def _pattern_ring(order: int) -> SeriesRing:
    return SeriesRing(order, ("t", "z"))


def f123_inv(order: int) -> TruncatedSeries:
    """Occurrences of consecutive 123 (t) and fixed points (z) over
    3412-avoiding involutions; closed form from the cluster method for
    the factor family {HHH, HHU, DHH, DHU}."""
    ring = _pattern_ring(order)
    x, t, z = ring.x(), ring.var("t"), ring.var("z")
    one = ring.one()
    tm1 = t - one
    q = (one - x * z * tm1 - x * x * z * z * tm1).invert()
    p = x**3 * z * z * tm1 * q
    a = x + p
    b = x * z + x**3 * z**3 * tm1 * q
    c = x * z + p * (z + x * tm1 + x * x * tm1 * z) + x**3 * tm1 * z
    rad = (one - c) ** 2 - a * a * 4
    # 2 A^2 / (2(1-B)A^2 - A^2 + A^2 C + A^2 sqrt(rad)), with A^2 cancelled
    return (one - b * 2 + c + rad.sqrt()).invert() * 2


def f132_inv(order: int) -> TruncatedSeries:
    """Occurrences of consecutive 132 (t) and fixed points (z) over
    3412-avoiding involutions; cluster method for the factors {HU, DU}."""
    ring = _pattern_ring(order)
    x, t, z = ring.x(), ring.var("t"), ring.var("z")
    one = ring.one()
    tm1 = t - one
    rad = (one - x * z - x * x * tm1) ** 2 - x * (x + x * x * z * tm1) * 4
    return (one - x * z + x * x * t - x * x + rad.sqrt()).invert() * 2


def f321_inv(order: int) -> TruncatedSeries:
    """Occurrences of consecutive 321 (t) and fixed points (z) over
    3412-avoiding involutions; root of the first-return quadratic."""
    ring = _pattern_ring(order)
    x, t, z = ring.x(), ring.var("t"), ring.var("z")
    a = (
        x**3 * z * t * 2
        - x**4 * z * z * t * 2
        + x * x * t * t
        - x**3 * z * t * t * 2
        + x**4 * z * z * t * t
        + x**4 * z * z
    )
    b = -ring.one() + x * z - x**3 * z * t - x * x * t * t + x * x + x**3 * z * t * t
    return solve_quadratic(a, b, ring.one(), 1)


def f312_inv(order: int) -> TruncatedSeries:
    """Occurrences of consecutive 312 (t) and fixed points (z) over
    3412-avoiding involutions; root of the first-return quadratic."""
    ring = _pattern_ring(order)
    x, t, z = ring.x(), ring.var("t"), ring.var("z")
    a = x**3 * z * t + x * x - x**3 * z
    b = x * z + x * x + x**3 * z - x**3 * z * t - x * x - ring.one()
    return solve_quadratic(a, b, ring.one(), 1)


def f312_via_t1t2(order: int) -> TruncatedSeries:
    """Second route to ``f312_inv``: solve the refinement counting UH and
    UHD factors separately (variables t1, t2), then collapse t1 -> t,
    t2 -> 1/t; the reciprocal cancels because every UHD contains a UH."""
    ring = SeriesRing(order, ("t1", "t2", "z"))
    x, t1, t2, z = ring.x(), ring.var("t1"), ring.var("t2"), ring.var("z")
    one = ring.one()

    def phi(g: TruncatedSeries) -> TruncatedSeries:
        return (
            one
            + x * z * g
            + x * x * g
            + x**3 * t1 * t2 * z * g
            + x**3 * z * t1 * g * (g - one)
            + x * x * g * (g - x * z * g - one)
        )

    g = fixed_point_solve(phi, ring)
    return monomial_substitute(g, _pattern_ring(order), {"t1": {"t": 1}, "t2": {"t": -1}})


def f213_inv(order: int) -> TruncatedSeries:
    """Occurrences of consecutive 213 over 3412-avoiding involutions: equal
    to ``f132_inv`` because reverse-complement is a fix-preserving
    involution of the class exchanging the two patterns."""
    return f132_inv(order)


def f231_inv(order: int) -> TruncatedSeries:
    """Occurrences of consecutive 231 over 3412-avoiding involutions: equal
    to ``f312_inv`` by the same reverse-complement symmetry."""
    return f312_inv(order)


# ---------------------------------------------------------------------------
# coinversions and descents over permutations avoiding 132 and consecutive 123


def coinv_des_gf(order: int) -> TruncatedSeries:
    """Joint distribution of (coinv, des) over the class avoiding 132 and
    consecutive 123, in variables (y, z).

    First-return recurrence: wrapping a non-empty front factor in U...D
    lifts it by one level, adding one unit of area per step, hence the
    inner substitution x -> x y:

        F = 1 + x + xz(F-1) + yx^2 + yzx^2 (F-1) + yzx^2 (F(xy)-1)
              + yz^2 x^2 (F(xy)-1)(F-1).

    At y=1 this is the distribution of (number of tunnels - 1) over
    Motzkin paths (OEIS A107131); at z=1 it is the area distribution
    (OEIS A129181); both are checked against the enumeration oracle.
    """
    ring = SeriesRing(order, ("y", "z"))
    x, y, z = ring.x(), ring.var("y"), ring.var("z")
    one = ring.one()
    xy = x * y

    def phi(f: TruncatedSeries) -> TruncatedSeries:
        fxy = f.substitute("x", xy)
        return (
            one
            + x
            + x * z * (f - one)
            + y * x * x
            + y * z * x * x * (f - one)
            + y * z * x * x * (fxy - one)
            + y * z * z * x * x * (fxy - one) * (f - one)
        )

    return fixed_point_solve(phi, ring)


# ---------------------------------------------------------------------------
# consecutive patterns over permutations avoiding 132 and consecutive 123:
# series in t (occurrences) alone


def _perm_ring(order: int) -> SeriesRing:
    return SeriesRing(order, ("t",))


def f213_perm(order: int) -> TruncatedSeries:
    """Occurrences of consecutive 213 over the class avoiding 132 and
    consecutive 123; equivalently long tunnels of Motzkin paths."""
    ring = _perm_ring(order)
    x, t = ring.x(), ring.var("t")
    return solve_quadratic(x * x * t, -ring.one() + x + x * x - x * x * t, ring.one(), 1)


def f231_perm(order: int) -> TruncatedSeries:
    """Occurrences of consecutive 231; equivalently non-initial up steps."""
    ring = _perm_ring(order)
    x, t = ring.x(), ring.var("t")
    ftt = solve_quadratic(x * x * t, -ring.one() + x, ring.one(), 1)
    return ring.one() + x * ftt + x * x * ftt * ftt


def f312_perm(order: int) -> TruncatedSeries:
    """Occurrences of consecutive 312; equivalently non-final peaks."""
    ring = _perm_ring(order)
    x, t = ring.x(), ring.var("t")
    one = ring.one()
    ftt = solve_quadratic(x * x, -one + x - x * x + x * x * t, one, 1)
    num = one - x * x * ftt + x * x - x * x * t
    den = one - x - x * x * ftt - x * x * t
    return num * den.invert()


def f321_perm(order: int) -> TruncatedSeries:
    """Occurrences of consecutive 321; equivalently horizontal steps that
    are neither initial nor followed exclusively by down steps."""
    ring = _perm_ring(order)
    x, t = ring.x(), ring.var("t")
    one = ring.one()
    g = solve_quadratic(x * x, -one + x * t, one, 1)
    num = one - x * t - x * x * g + x - x * x * t + x * x - x**3 * t + x**3
    den = -x * x + one - x * t - x * x * g
    return num * den.invert()


# ---------------------------------------------------------------------------
# generic cluster engine


class ClusterError(ValueError):
    """A cluster family violates the engine's preconditions."""


@dataclass(frozen=True)
class ClusterSpec:
    """A finite factor set over {U, D, H} with no word a proper factor of
    another."""

    words: tuple[str, ...]

    def __post_init__(self):
        words = tuple(self.words)
        object.__setattr__(self, "words", words)
        if not words:
            raise ClusterError("empty factor set")
        if len(set(words)) != len(words):
            raise ClusterError(f"duplicate factors in {words}")
        for w in words:
            if not w or any(ch not in "UDH" for ch in w):
                raise ClusterError(f"bad factor {w!r}")
        for v in words:
            for w in words:
                if v != w and v in w:
                    raise ClusterError(f"{v!r} is a proper factor of {w!r}")

    @classmethod
    def parse(cls, text: str) -> "ClusterSpec":
        return cls(tuple(part.strip() for part in text.split(",") if part.strip()))


@dataclass(frozen=True)
class ClusterGFs:
    """Cluster generating functions in (x, t, z) split by the letter the
    cluster reduces to; the depth0 variants count only depth-0 clusters,
    the plain ones count depth -1 and 0 together.  x marks length, t the
    number of marked occurrences, z the number of H steps."""

    up: TruncatedSeries
    up_depth0: TruncatedSeries
    down: TruncatedSeries
    down_depth0: TruncatedSeries
    horizontal: TruncatedSeries
    horizontal_depth0: TruncatedSeries


_STEP_DELTA = {"U": 1, "D": -1, "H": 0}


def cluster_gfs(spec: ClusterSpec, order: int) -> ClusterGFs:
    """Enumerate all clusters of length up to the truncation order by
    dynamic programming over chains of overlapping marked occurrences.

    A cluster is grown one mark at a time: a new mark must start strictly
    after the previous mark's start and no later than the current word
    end; it may extend the word or sit inside it, but must agree with the
    existing letters on the overlap.  Each reachable state is a complete
    cluster.  Clusters that do not reduce to a single step, or reduce
    with depth below -1, violate the engine's precondition and raise
    ClusterError naming a witness.
    """
    words = spec.words
    max_suffix = max(len(w) for w in words) - 1
    # bucket key: (length, suffix length); node: (suffix, net, miny, marks, h)
    buckets: dict[tuple[int, int], dict[tuple, tuple[int, str]]] = {}

    def push(length, suffix, net, miny, marks, h, count, witness):
        if length > order:
            return
        node = (suffix, net, miny, marks, h)
        bucket = buckets.setdefault((length, len(suffix)), {})
        if node in bucket:
            prev_count, prev_witness = bucket[node]
            bucket[node] = (prev_count + count, prev_witness)
        else:
            bucket[node] = (count, witness)

    for w in words:
        y = mn = 0
        for ch in w:
            y += _STEP_DELTA[ch]
            mn = min(mn, y)
        push(len(w), w[1:], y, mn, 1, w.count("H"), 1, w)

    tallies: dict[tuple[str, int], dict[tuple[int, int, int], int]] = {}
    for length in range(1, order + 1):
        for slen in range(max_suffix, -1, -1):
            bucket = buckets.pop((length, slen), None)
            if not bucket:
                continue
            for (suffix, net, miny, marks, h), (count, witness) in bucket.items():
                if net not in (-1, 0, 1):
                    raise ClusterError(
                        f"cluster {witness!r} does not reduce to a single step "
                        f"(height change {net})"
                    )
                depth = miny + 1 if net == -1 else miny
                if depth < -1:
                    raise ClusterError(f"cluster {witness!r} has depth {depth} < -1")
                letter = "U" if net == 1 else "D" if net == -1 else "H"
                tally = tallies.setdefault((letter, depth), {})
                key = (length, marks, h)
                tally[key] = tally.get(key, 0) + count
                for v in words:
                    for p in range(slen):
                        avail = slen - p
                        overlap = min(len(v), avail)
                        if v[:overlap] != suffix[p : p + overlap]:
                            continue
                        appended = v[avail:] if len(v) > avail else ""
                        y = net
                        mn = miny
                        for ch in appended:
                            y += _STEP_DELTA[ch]
                            mn = min(mn, y)
                        push(
                            length + len(appended),
                            v[1:] if appended else suffix[p + 1 :],
                            y,
                            mn,
                            marks + 1,
                            h + appended.count("H"),
                            count,
                            witness + appended,
                        )

    ring = _pattern_ring(order)

    def build(letter: str, depths: tuple[int, ...]) -> TruncatedSeries:
        total = ring.zero()
        for depth in depths:
            for (length, marks, h), count in tallies.get((letter, depth), {}).items():
                total = total + ring.monomial(count, length, t=marks, z=h)
        return total

    return ClusterGFs(
        up=build("U", (-1, 0)),
        up_depth0=build("U", (0,)),
        down=build("D", (-1, 0)),
        down_depth0=build("D", (0,)),
        horizontal=build("H", (-1, 0)),
        horizontal_depth0=build("H", (0,)),
    )


def cluster_count_gf(spec: ClusterSpec, order: int) -> TruncatedSeries:
    """Motzkin words by length (x), total occurrences of the factor set
    (t), and number of H steps (z).

    Assembled from the cluster generating functions: with l, y, s the
    step-or-cluster weights at positive height, primed at height zero,
    the marked-word series is G = 1/(1 - l' - y' s' G_1) where G_1 solves
    y s G_1^2 + (l - 1) G_1 + 1 = 0; substituting t -> t - 1 converts
    marked-occurrence weights into plain occurrence counts.
    """
    gfs = cluster_gfs(spec, order)
    ring = _pattern_ring(order)
    x, z, one = ring.x(), ring.var("z"), ring.one()
    level = x * z + gfs.horizontal
    level0 = x * z + gfs.horizontal_depth0
    rise, rise0 = x + gfs.up, x + gfs.up_depth0
    fall, fall0 = x + gfs.down, x + gfs.down_depth0
    g1 = solve_quadratic(rise * fall, level - one, one, 1)
    g = (one - level0 - rise0 * fall0 * g1).invert()
    return g.substitute("t", ring.var("t") - one)


#: The factor families realizing consecutive 123 and 132 over involutions.
CLUSTER_123 = ClusterSpec(("HHH", "HHU", "DHH", "DHU"))
CLUSTER_132 = ClusterSpec(("HU", "DU"))


# ---------------------------------------------------------------------------
# enumeration oracle


@dataclass(frozen=True)
class ClassSpec:
    """A combinatorial class: S(...) for permutations avoiding patterns,
    I(...) for involutions avoiding patterns, M for Motzkin words."""

    base: str
    patterns: tuple[PatternSpec, ...] = ()

    def __post_init__(self):
        if self.base not in ("S", "I", "M"):
            raise ValueError(f"unknown class base {self.base!r}")
        object.__setattr__(self, "patterns", tuple(self.patterns))

    @classmethod
    def parse(cls, text: str) -> "ClassSpec":
        text = text.strip()
        if text == "M":
            return cls("M")
        if "(" not in text or not text.endswith(")"):
            raise ValueError(f"cannot parse class {text!r}")
        base, body = text[:-1].split("(", 1)
        base = base.strip()
        patterns = tuple(
            PatternSpec.parse(part.strip()) for part in body.split(",") if part.strip()
        )
        return cls(base, patterns)

    def __str__(self) -> str:
        if self.base == "M":
            return "M"
        return f"{self.base}({','.join(str(p) for p in self.patterns)})"

    def members(self, n: int, bound: int = ENUMERATION_BOUND) -> Iterator:
        if self.base == "M":
            yield from enumerate_motzkin(n, bound)
        elif self.base == "I":
            yield from enumerate_class(n, self.patterns, base="involutions", bound=bound)
        else:
            yield from enumerate_class(n, self.patterns, base="all", bound=bound)


_PERM_STATISTICS: dict[str, Callable[[Permutation], int]] = {
    "inv": inv_count,
    "coinv": coinv_count,
    "des": des_count,
    "asc": asc_count,
    "fix": fix_count,
}


def statistic_function(name: str, base: str) -> Callable:
    """Resolve a statistic name for a class base.

    Permutation classes: inv, coinv, des, asc, fix, and occ:<pattern> for
    occurrence counts.  Motzkin words: any named path statistic plus
    subword:<factor>.
    """
    if base == "M":
        if name.startswith("subword:"):
            factor = name.split(":", 1)[1]
            return lambda w: subword_count(w, factor)
        if name in PATH_STATISTIC_NAMES:
            return lambda w: named_statistic(w, name)
        raise ValueError(f"unknown path statistic {name!r}")
    if name in _PERM_STATISTICS:
        return _PERM_STATISTICS[name]
    if name.startswith("occ:"):
        spec = PatternSpec.parse(name.split(":", 1)[1])
        return lambda p: occurrences(p, spec)
    raise ValueError(f"unknown permutation statistic {name!r}")


@dataclass(frozen=True)
class DistributionTable:
    """Exact counts of statistic-value tuples over a class at one size."""

    n: int
    class_spec: str
    statistics: tuple[str, ...]
    counts: dict[tuple[int, ...], int]

    def total(self) -> int:
        return sum(self.counts.values())

    def rows(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.counts.items())


def distribution_oracle(
    class_spec: ClassSpec | str,
    statistics: Sequence[str],
    n: int,
    bound: int = ENUMERATION_BOUND,
) -> DistributionTable:
    """Tabulate the joint distribution of the statistics by exhaustive
    enumeration of the class."""
    if isinstance(class_spec, str):
        class_spec = ClassSpec.parse(class_spec)
    if n > bound:
        raise BoundExceededError(n, bound, f"oracle for {class_spec}")
    stats = tuple(statistics)
    funcs = [statistic_function(name, class_spec.base) for name in stats]
    counts: dict[tuple[int, ...], int] = {}
    for member in class_spec.members(n, bound):
        key = tuple(f(member) for f in funcs)
        counts[key] = counts.get(key, 0) + 1
    return DistributionTable(n, str(class_spec), stats, counts)
