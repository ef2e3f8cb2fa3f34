"""Weighted shift plus finite-rank operators on l2, truncated exactly.

An :class:`LTwoOpSpec` describes an operator as a shift direction, a rational
weight rule in the coordinate index, and a finite list of extra entries. The
operator acts on l2 sequences; ``truncate`` compresses it onto the first n
coordinates as an exact matrix. Kernel vectors of the truncation that vanish
from coordinate n-1 onward are kernel vectors of the infinite operator:
certifying genuine point-spectrum facts is the purpose of
``finite_support_kernel``. Eigenvalues of truncations, by contrast, are
reported by ``eigen_convergence`` as evidence only; finite sections of
non-normal operators need not converge to the true spectrum.

Spec text format (one key per line, ``#`` comments allowed):

    direction: down
    weights: 1/(k+1)
    weights_odd: -1/(k+1)
    weights_prefix: 1/2 0 1/3
    finite: 2 1 -1/2

``weights`` sets the rule for every index, ``weights_even``/``weights_odd``
override one parity. A rule is either a scalar literal (constant weight) or
``c/(k+a)`` with integer or rational c and nonnegative integer a. The
optional prefix lists explicit weights for the first indices. ``finite``
lines add entries (row, col, value) in 1-based coordinates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import LiteralFormatError
from .exact import ExactMatrix, SubspaceBasis, rank_kernel
from .numeric import CMatrix, eigenvalues
from .scalar import Scalar

__all__ = [
    "WeightRule",
    "LTwoOpSpec",
    "truncate",
    "finite_support_kernel",
    "eigen_convergence",
    "ConvergenceRow",
    "parse_spec",
    "format_spec",
]

_DIRECTIONS = ("down", "up", "none")

# c/(k+a) with rational c and integer a >= 0
_TERM_RE = re.compile(
    r"^\s*(?P<coef>[+-]?\d+(?:/\d+)?)\s*/\s*\(\s*k\s*\+\s*(?P<shift>\d+)\s*\)\s*$"
)


@dataclass(frozen=True)
class WeightRule:
    """Weight at 1-based index k.

    Each parity term is None (contributes 0) or a (coef, shift) pair meaning
    coef/(k+shift). ``const`` adds to every index. ``prefix`` overrides the
    rule entirely at indices 1..len(prefix).
    """

    even: tuple[Fraction, int] | None = None
    odd: tuple[Fraction, int] | None = None
    const: Scalar = Scalar(0)
    prefix: tuple[Scalar, ...] = ()

    def weight(self, k):
        if k < 1:
            raise ValueError("weight index must be >= 1")
        if k <= len(self.prefix):
            return self.prefix[k - 1]
        term = self.even if k % 2 == 0 else self.odd
        value = Scalar.coerce(self.const)
        if term is not None:
            coef, shift = term
            value = value + Scalar(Fraction(coef, k + shift))
        return value

    def is_zero(self):
        return (
            self.even is None
            and self.odd is None
            and Scalar.coerce(self.const).is_zero()
            and all(Scalar.coerce(w).is_zero() for w in self.prefix)
        )


@dataclass(frozen=True)
class LTwoOpSpec:
    """Shift direction + weight rule + finite-rank entries (1-based)."""

    direction: str = "none"
    weights: WeightRule = field(default_factory=WeightRule)
    finite_rank: tuple[tuple[int, int, Scalar], ...] = ()

    def __post_init__(self):
        if self.direction not in _DIRECTIONS:
            raise ValueError(f"direction must be one of {_DIRECTIONS}")
        for r, c, _ in self.finite_rank:
            if r < 1 or c < 1:
                raise ValueError("finite_rank indices are 1-based positive")

    def support(self):
        """Largest coordinate index the finite-rank part touches."""
        s = 0
        for r, c, _ in self.finite_rank:
            s = max(s, r, c)
        return s

    def __add__(self, other):
        """Pointwise sum, defined when shift parts do not collide.

        Two specs with the same direction merge their weight rules only if
        one rule is identically zero or both rules can be kept via the
        finite-rank part; to stay simple we require compatible parities.
        """
        if not isinstance(other, LTwoOpSpec):
            return NotImplemented
        if other.direction == "none" or other.weights.is_zero():
            return LTwoOpSpec(
                direction=self.direction,
                weights=self.weights,
                finite_rank=self.finite_rank + other.finite_rank,
            )
        if self.direction == "none" or self.weights.is_zero():
            return LTwoOpSpec(
                direction=other.direction,
                weights=other.weights,
                finite_rank=self.finite_rank + other.finite_rank,
            )
        if self.direction != other.direction:
            raise ValueError("cannot add specs with opposing shift directions")
        merged = _merge_rules(self.weights, other.weights)
        return LTwoOpSpec(
            direction=self.direction,
            weights=merged,
            finite_rank=self.finite_rank + other.finite_rank,
        )


def _merge_rules(r1, r2):
    # Parity-wise merge: each parity slot must be free in one of the rules.
    prefix_len = max(len(r1.prefix), len(r2.prefix))
    if prefix_len:
        raise ValueError("cannot merge weight rules with explicit prefixes")
    const = Scalar.coerce(r1.const) + Scalar.coerce(r2.const)

    def pick(t1, t2):
        if t1 is not None and t2 is not None:
            if t1[1] == t2[1]:
                coef = t1[0] + t2[0]
                return None if coef == 0 else (coef, t1[1])
            raise ValueError("cannot merge two closed-form terms of one parity")
        return t1 if t1 is not None else t2

    return WeightRule(
        even=pick(r1.even, r2.even), odd=pick(r1.odd, r2.odd), const=const
    )


def truncate(spec, n):
    """Exact n x n compression onto the first n coordinates."""
    if n < 1 or n < spec.support():
        raise ValueError(f"truncation size {n} below finite-rank support {spec.support()}")
    m = ExactMatrix.zeros(n)
    if spec.direction == "down":
        for k in range(1, n):
            w = spec.weights.weight(k)
            if not w.is_zero():
                m = m + ExactMatrix.single_entry(n, k, k - 1, w)
    elif spec.direction == "up":
        for k in range(1, n):
            w = spec.weights.weight(k)
            if not w.is_zero():
                m = m + ExactMatrix.single_entry(n, k - 1, k, w)
    for r, c, v in spec.finite_rank:
        v = Scalar.coerce(v)
        if not v.is_zero():
            m = m + ExactMatrix.single_entry(n, r - 1, c - 1, v)
    return m


def finite_support_kernel(spec, n):
    """Kernel vectors of the n-truncation supported inside coordinates < n.

    Such vectors are annihilated by the infinite operator itself: every row
    of the infinite matrix that meets coordinates 1..n-1 is present in the
    truncation. The basis is therefore a certified subspace of the true
    kernel, stable as n grows.
    """
    if n < spec.support() + 1 or n < 2:
        raise ValueError(f"need n >= support+1 = {spec.support() + 1} and n >= 2")
    m = truncate(spec, n)
    _, kernel, _ = rank_kernel(m)
    head = SubspaceBasis.span(
        [
            tuple(Scalar(1) if j == i else Scalar(0) for j in range(n))
            for i in range(n - 1)
        ],
        ambient=n,
    )
    return kernel.intersect(head)


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    spectrum: object

    def to_json_dict(self):
        return {
            "n": self.n,
            "points": [
                [z.real, z.imag, mult] for z, mult in self.spectrum.points
            ],
            "max_modulus": self.spectrum.max_modulus(),
        }


def eigen_convergence(spec, n_list):
    """Eigenvalue clusters of truncations for each n; evidence, not proof."""
    n_list = list(n_list)
    if not n_list or any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ValueError("n_list must be nonempty and strictly ascending")
    rows = []
    for n in n_list:
        spectrum = eigenvalues(CMatrix.from_exact(truncate(spec, n)))
        rows.append(ConvergenceRow(n=n, spectrum=spectrum))
    return rows


# -- text format -------------------------------------------------------------


def _parse_term(text, where):
    text = text.strip()
    m = _TERM_RE.match(text)
    if m:
        return (Fraction(m.group("coef")), int(m.group("shift")))
    raise LiteralFormatError(f"{where}: expected c/(k+a), got {text!r}")


def _parse_rule_value(text, where):
    """A rule is a closed-form term or a constant scalar literal."""
    text = text.strip()
    if _TERM_RE.match(text):
        return _parse_term(text, where), None
    try:
        return None, Scalar.parse(text)
    except LiteralFormatError:
        raise LiteralFormatError(
            f"{where}: expected c/(k+a) or a scalar literal, got {text!r}"
        ) from None


def parse_spec(text):
    """Parse the declarative text format into an LTwoOpSpec."""
    direction = "none"
    even = odd = None
    const = Scalar(0)
    prefix = ()
    finite = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise LiteralFormatError(f"line {lineno}: expected 'key: value'")
        key, _, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        where = f"line {lineno} ({key})"
        if key == "direction":
            if value not in _DIRECTIONS:
                raise LiteralFormatError(f"{where}: unknown direction {value!r}")
            direction = value
        elif key in ("weights", "weights_even", "weights_odd"):
            term, constant = _parse_rule_value(value, where)
            if key == "weights":
                if constant is not None:
                    const = constant
                else:
                    even = odd = term
            elif key == "weights_even":
                if constant is not None and not constant.is_zero():
                    raise LiteralFormatError(f"{where}: parity constants unsupported")
                even = term
            else:
                if constant is not None and not constant.is_zero():
                    raise LiteralFormatError(f"{where}: parity constants unsupported")
                odd = term
        elif key == "weights_prefix":
            prefix = tuple(Scalar.parse(tok) for tok in value.split())
        elif key == "finite":
            parts = value.split()
            if len(parts) != 3:
                raise LiteralFormatError(f"{where}: expected 'row col value'")
            r, c = int(parts[0]), int(parts[1])
            finite.append((r, c, Scalar.parse(parts[2])))
        else:
            raise LiteralFormatError(f"line {lineno}: unknown key {key!r}")
    rule = WeightRule(even=even, odd=odd, const=const, prefix=prefix)
    return LTwoOpSpec(direction=direction, weights=rule, finite_rank=tuple(finite))


def _format_term(term):
    coef, shift = term
    return f"{coef}/(k+{shift})"


def format_spec(spec):
    """Canonical text rendering; parse_spec(format_spec(s)) reproduces s."""
    lines = [f"direction: {spec.direction}"]
    rule = spec.weights
    if rule.even is not None and rule.even == rule.odd:
        lines.append(f"weights: {_format_term(rule.even)}")
    else:
        if rule.even is not None:
            lines.append(f"weights_even: {_format_term(rule.even)}")
        if rule.odd is not None:
            lines.append(f"weights_odd: {_format_term(rule.odd)}")
    if not Scalar.coerce(rule.const).is_zero():
        lines.append(f"weights: {Scalar.coerce(rule.const).literal()}")
    if rule.prefix:
        lines.append(
            "weights_prefix: " + " ".join(Scalar.coerce(w).literal() for w in rule.prefix)
        )
    for r, c, v in spec.finite_rank:
        lines.append(f"finite: {r} {c} {Scalar.coerce(v).literal()}")
    return "\n".join(lines) + "\n"
