"""
Truncated multivariate power series with exact integer coefficients, and
Laurent series in an auxiliary variable z whose coefficients are such series.

Truncation is by total degree: a MultiSeries with ``max_degree`` K keeps
only monomials q_0^e_0 ... q_{n-1}^e_{n-1} with e_0 + ... + e_{n-1} <= K.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

Exponents = Tuple[int, ...]


class SeriesMismatch(ValueError):
    """Operands disagree on number of variables, truncation or window."""


def graded_lex_key(exps: Exponents):
    # total degree ascending, then q_0 before q_1 before ... within a degree
    return (sum(exps), tuple(-e for e in exps))


class MultiSeries:
    """
    An element of Z[[q_0, ..., q_{n-1}]] truncated at total degree K.

    Instances are treated as immutable; every operation returns a new one.
    """

    __slots__ = ("num_vars", "max_degree", "_terms")

    def __init__(self, num_vars: int, max_degree: int,
                 terms: Optional[Mapping[Exponents, int]] = None):
        if num_vars < 1:
            raise ValueError("need at least one variable")
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        self.num_vars = num_vars
        self.max_degree = max_degree
        clean: Dict[Exponents, int] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != num_vars or min(exps) < 0:
                raise ValueError("bad exponent vector %r" % (exps,))
            if c and sum(exps) <= max_degree:
                clean[exps] = clean.get(exps, 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}

    # construction helpers

    @classmethod
    def zero(cls, num_vars: int, max_degree: int) -> "MultiSeries":
        return cls(num_vars, max_degree)

    @classmethod
    def one(cls, num_vars: int, max_degree: int) -> "MultiSeries":
        return cls(num_vars, max_degree, {(0,) * num_vars: 1})

    @classmethod
    def monomial(cls, num_vars: int, max_degree: int, exps: Sequence[int],
                 coefficient: int = 1) -> "MultiSeries":
        return cls(num_vars, max_degree, {tuple(exps): coefficient})

    @classmethod
    def _raw(cls, num_vars, max_degree, terms) -> "MultiSeries":
        # trusted constructor: terms already clean
        s = object.__new__(cls)
        s.num_vars = num_vars
        s.max_degree = max_degree
        s._terms = terms
        return s

    # access

    @property
    def terms(self) -> Dict[Exponents, int]:
        return dict(self._terms)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def __getitem__(self, exps: Sequence[int]) -> int:
        return self.coefficient(exps)

    def items(self) -> List[Tuple[Exponents, int]]:
        """Terms in graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: graded_lex_key(t[0]))

    def __iter__(self) -> Iterator[Tuple[Exponents, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> int:
        return self._terms.get((0,) * self.num_vars, 0)

    def degree_part(self, d: int) -> Dict[Exponents, int]:
        return {e: c for e, c in self._terms.items() if sum(e) == d}

    def truncate(self, max_degree: int) -> "MultiSeries":
        if max_degree > self.max_degree:
            raise ValueError("cannot raise the truncation degree")
        return MultiSeries(self.num_vars, max_degree, self._terms)

    def _check(self, other: "MultiSeries"):
        if not isinstance(other, MultiSeries):
            raise TypeError("expected a MultiSeries, got %r" % (type(other),))
        if (self.num_vars, self.max_degree) != (other.num_vars, other.max_degree):
            raise SeriesMismatch(
                "series over (n=%d, K=%d) and (n=%d, K=%d)" % (
                    self.num_vars, self.max_degree, other.num_vars, other.max_degree))

    # arithmetic

    def __add__(self, other: "MultiSeries") -> "MultiSeries":
        self._check(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return MultiSeries._raw(self.num_vars, self.max_degree, terms)

    def __neg__(self) -> "MultiSeries":
        return MultiSeries._raw(self.num_vars, self.max_degree,
                                {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "MultiSeries") -> "MultiSeries":
        return self + (-other)

    def scale(self, k: int) -> "MultiSeries":
        if not k:
            return MultiSeries.zero(self.num_vars, self.max_degree)
        return MultiSeries._raw(self.num_vars, self.max_degree,
                                {e: k * c for e, c in self._terms.items()})

    def shift(self, exps: Sequence[int]) -> "MultiSeries":
        """Multiply by the monomial q^exps."""
        exps = tuple(exps)
        K = self.max_degree - sum(exps)
        terms = {}
        if K >= 0:
            for e, c in self._terms.items():
                if sum(e) <= K:
                    terms[tuple(x + y for x, y in zip(e, exps))] = c
        return MultiSeries._raw(self.num_vars, self.max_degree, terms)

    def _by_degree(self) -> List[List[Tuple[Exponents, int]]]:
        buckets: List[List[Tuple[Exponents, int]]] = [[] for _ in range(self.max_degree + 1)]
        for e, c in self._terms.items():
            buckets[sum(e)].append((e, c))
        return buckets

    def __mul__(self, other: "MultiSeries") -> "MultiSeries":
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        K = self.max_degree
        left = self._by_degree()
        right = other._by_degree()
        out: Dict[Exponents, int] = {}
        for d1 in range(K + 1):
            if not left[d1]:
                continue
            for d2 in range(K + 1 - d1):
                if not right[d2]:
                    continue
                for e1, c1 in left[d1]:
                    for e2, c2 in right[d2]:
                        e = tuple(x + y for x, y in zip(e1, e2))
                        out[e] = out.get(e, 0) + c1 * c2
        return MultiSeries._raw(self.num_vars, K, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiSeries":
        if k < 0:
            return series_invert(self) ** (-k)
        result = MultiSeries.one(self.num_vars, self.max_degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (self.num_vars == other.num_vars
                and self.max_degree == other.max_degree
                and self._terms == other._terms)

    def __hash__(self):
        return hash((self.num_vars, self.max_degree, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return "MultiSeries(n=%d, K=%d, %s)" % (self.num_vars, self.max_degree, self)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in self.items():
            mono = "*".join(
                "q%d" % i if x == 1 else "q%d^%d" % (i, x)
                for i, x in enumerate(e) if x)
            if not mono:
                piece = str(abs(c))
            elif abs(c) == 1:
                piece = mono
            else:
                piece = "%d*%s" % (abs(c), mono)
            sign = "-" if c < 0 else "+"
            out.append((sign, piece))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, piece in out[1:]:
            text += " %s %s" % (sign, piece)
        return text

    # serialization

    def to_json_obj(self) -> dict:
        return {
            "n": self.num_vars,
            "max_degree": self.max_degree,
            "terms": [{"exponents": list(e), "coefficient": str(c)} for e, c in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text) -> "MultiSeries":
        obj = json.loads(text) if isinstance(text, str) else text
        terms: Dict[Exponents, int] = {}
        for t in obj["terms"]:
            e = tuple(t["exponents"])
            if e in terms:
                raise ValueError("duplicate exponent vector %r" % (e,))
            terms[e] = int(t["coefficient"])
        return cls(int(obj["n"]), int(obj["max_degree"]), terms)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["e%d" % i for i in range(self.num_vars)] + ["coefficient"])
        for e, c in self.items():
            w.writerow(list(e) + [str(c)])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, max_degree: int) -> "MultiSeries":
        rows = list(csv.reader(io.StringIO(text)))
        header, body = rows[0], rows[1:]
        n = len(header) - 1
        return cls(n, max_degree, {tuple(int(x) for x in r[:n]): int(r[n]) for r in body})


def series_add(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    return a + b


def series_mul(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    return a * b


def series_invert(a: MultiSeries) -> MultiSeries:
    """
    Multiplicative inverse up to the truncation degree.

    Solved degree by degree: with a = u + a', u = +-1, the degree-d part of
    the inverse b is -u * sum_{j=1..d} a_j b_{d-j}.
    """
    u = a.constant_term()
    if u not in (1, -1):
        raise ZeroDivisionError("constant term %d is not a unit in Z" % u)
    n, K = a.num_vars, a.max_degree
    a_parts = a._by_degree()
    b_parts: List[Dict[Exponents, int]] = [{(0,) * n: u}]
    for d in range(1, K + 1):
        acc: Dict[Exponents, int] = {}
        for j in range(1, d + 1):
            bd = b_parts[d - j]
            if not bd:
                continue
            for e1, c1 in a_parts[j]:
                for e2, c2 in bd.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    acc[e] = acc.get(e, 0) + c1 * c2
        b_parts.append({e: -u * c for e, c in acc.items() if c})
    terms = {}
    for part in b_parts:
        terms.update(part)
    return MultiSeries._raw(n, K, terms)


def specialize_uniform(s: MultiSeries) -> List[int]:
    """Coefficients of t^0..t^K after setting every q_c to t."""
    out = [0] * (s.max_degree + 1)
    for e, c in s._terms.items():
        out[sum(e)] += c
    return out


def specialize_uniform_series(s: MultiSeries) -> MultiSeries:
    """As specialize_uniform, but returned as a one-variable MultiSeries."""
    coeffs = specialize_uniform(s)
    return MultiSeries(1, s.max_degree, {(d,): c for d, c in enumerate(coeffs)})


class ZLaurentSeries:
    """
    A Laurent polynomial sum_d z^d * s_d, where each s_d is a MultiSeries over
    the same (n, K) and d is confined to the window [-W, W].
    """

    __slots__ = ("num_vars", "max_degree", "window", "_coeffs")

    def __init__(self, num_vars: int, max_degree: int, window: int,
                 coeffs: Optional[Mapping[int, MultiSeries]] = None):
        if window < 0:
            raise ValueError("window must be non-negative")
        self.num_vars = num_vars
        self.max_degree = max_degree
        self.window = window
        self._coeffs: Dict[int, MultiSeries] = {}
        for d, s in (coeffs or {}).items():
            if (s.num_vars, s.max_degree) != (num_vars, max_degree):
                raise SeriesMismatch("coefficient at z^%d has the wrong shape" % d)
            if s.is_zero():
                continue
            if abs(d) > window:
                raise ValueError("z^%d lies outside the window [-%d, %d]" % (d, window, window))
            self._coeffs[d] = s

    @classmethod
    def one(cls, num_vars: int, max_degree: int, window: int) -> "ZLaurentSeries":
        return cls(num_vars, max_degree, window, {0: MultiSeries.one(num_vars, max_degree)})

    @classmethod
    def binomial(cls, num_vars: int, max_degree: int, window: int,
                 z_power: int, exps: Sequence[int], sign: int = 1) -> "ZLaurentSeries":
        """The factor 1 + sign * z^z_power * q^exps."""
        mono = MultiSeries.monomial(num_vars, max_degree, exps, sign)
        if z_power == 0:
            return cls(num_vars, max_degree, window,
                       {0: MultiSeries.one(num_vars, max_degree) + mono})
        return cls(num_vars, max_degree, window,
                   {0: MultiSeries.one(num_vars, max_degree), z_power: mono})

    def coefficient(self, d: int) -> MultiSeries:
        return self._coeffs.get(d, MultiSeries.zero(self.num_vars, self.max_degree))

    __getitem__ = coefficient

    def z_degrees(self) -> List[int]:
        return sorted(self._coeffs)

    def map(self, fn) -> "ZLaurentSeries":
        """Apply a coefficient-wise map MultiSeries -> MultiSeries."""
        new = {d: fn(s) for d, s in self._coeffs.items()}
        first = next(iter(new.values()), None)
        if first is None:
            return self
        return ZLaurentSeries(first.num_vars, first.max_degree, self.window, new)

    def _check(self, other: "ZLaurentSeries"):
        if ((self.num_vars, self.max_degree, self.window)
                != (other.num_vars, other.max_degree, other.window)):
            raise SeriesMismatch("Laurent series with different (n, K, W)")

    def __add__(self, other: "ZLaurentSeries") -> "ZLaurentSeries":
        self._check(other)
        coeffs = dict(self._coeffs)
        for d, s in other._coeffs.items():
            coeffs[d] = coeffs[d] + s if d in coeffs else s
        return ZLaurentSeries(self.num_vars, self.max_degree, self.window, coeffs)

    def __mul__(self, other: "ZLaurentSeries") -> "ZLaurentSeries":
        return zl_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZLaurentSeries):
            return NotImplemented
        return ((self.num_vars, self.max_degree, self.window, self._coeffs)
                == (other.num_vars, other.max_degree, other.window, other._coeffs))

    def __repr__(self) -> str:
        body = " + ".join("z^%d*(%s)" % (d, self._coeffs[d]) for d in self.z_degrees())
        return "ZLaurentSeries(n=%d, K=%d, W=%d, %s)" % (
            self.num_vars, self.max_degree, self.window, body or "0")


def zl_mul(a: ZLaurentSeries, b: ZLaurentSeries) -> ZLaurentSeries:
    """
    Product in z with q-truncation at K.

    A term whose z-exponent leaves the window is dropped only when its
    q-part is already truncated away; anything else means the window was
    chosen too small, and that is an error rather than a silent loss.
    """
    a._check(b)
    coeffs: Dict[int, MultiSeries] = {}
    for da, sa in a._coeffs.items():
        for db, sb in b._coeffs.items():
            prod = sa * sb
            if prod.is_zero():
                continue
            d = da + db
            if abs(d) > a.window:
                raise ValueError(
                    "z^%d survives truncation but lies outside the window %d" % (d, a.window))
            coeffs[d] = coeffs[d] + prod if d in coeffs else prod
    return ZLaurentSeries(a.num_vars, a.max_degree, a.window, coeffs)


def z_constant_term(s: ZLaurentSeries) -> MultiSeries:
    return s.coefficient(0)


def z_constant_term_of_product(a: ZLaurentSeries, b: ZLaurentSeries) -> MultiSeries:
    """[z^0](a*b) without forming the other z-coefficients."""
    a._check(b)
    out = MultiSeries.zero(a.num_vars, a.max_degree)
    for d, s in a._coeffs.items():
        if -d in b._coeffs:
            out = out + s * b._coeffs[-d]
    return out


def product(factors: Iterable[MultiSeries], num_vars: int, max_degree: int) -> MultiSeries:
    result = MultiSeries.one(num_vars, max_degree)
    for f in factors:
        result = result * f
    return result
