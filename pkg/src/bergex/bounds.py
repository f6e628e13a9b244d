"""Catalog of the bound formulas as exact-arithmetic evaluators.

Every algebraic value is carried as A + Q*sqrt(R) with rational A, Q, R >= 0,
so comparisons against observed integers square out exactly and never touch
floating point. The one formula with a logarithmic factor is exact at t = 2
(the factor collapses) and numeric otherwise, flagged advisory. Residual
O(.) / o(1) terms are named in the assumptions, never folded into values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, getcontext
from fractions import Fraction

_RENDER_DIGITS = 12
_WORK_DIGITS = 40


def _to_decimal(x: Fraction) -> Decimal:
    getcontext().prec = _WORK_DIGITS
    return Decimal(x.numerator) / Decimal(x.denominator)


def _render(value: Decimal) -> str:
    getcontext().prec = _RENDER_DIGITS
    return str(+value)


@dataclass(frozen=True)
class AlgebraicValue:
    """Exact value A + Q * sqrt(R) with rational components, R >= 0."""

    a: Fraction = Fraction(0)
    q: Fraction = Fraction(0)
    r: Fraction = Fraction(0)

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("radicand must be nonnegative")

    @classmethod
    def rational(cls, x) -> "AlgebraicValue":
        return cls(Fraction(x), Fraction(0), Fraction(0))

    @property
    def is_rational(self) -> bool:
        return self.q == 0 or self.r == 0

    def compare(self, other) -> int:
        """Sign of (self - other) for rational other; exact."""
        diff = Fraction(other) - self.a  # compare q*sqrt(r) against diff
        rhs_sq = self.q * self.q * self.r
        if rhs_sq == 0:
            return -1 if diff > 0 else (1 if diff < 0 else 0)
        if self.q > 0:
            if diff <= 0:
                return 1
            lhs, rhs = rhs_sq, diff * diff
            return -1 if lhs < rhs else (0 if lhs == rhs else 1)
        # q < 0: value = a - |q| sqrt(r) < a
        if diff >= 0:
            return -1
        lhs, rhs = rhs_sq, diff * diff
        return 1 if lhs < rhs else (0 if lhs == rhs else -1)

    def __float__(self) -> float:
        return float(self.a) + float(self.q) * math.sqrt(float(self.r))

    @property
    def rendered(self) -> str:
        getcontext().prec = _WORK_DIGITS
        val = _to_decimal(self.a) + _to_decimal(self.q) * _to_decimal(self.r).sqrt()
        return _render(val)

    def json_fields(self) -> dict:
        return {
            "rational": str(self.a),
            "root_coefficient": str(self.q),
            "radicand": str(self.r),
            "rendered": self.rendered,
        }


@dataclass(frozen=True)
class NumericValue:
    """Floating approximation for the one transcendental-coefficient entry."""

    value: float

    def compare(self, other) -> int:
        x = float(other)
        return -1 if self.value < x else (0 if self.value == x else 1)

    def __float__(self) -> float:
        return self.value

    @property
    def rendered(self) -> str:
        getcontext().prec = _WORK_DIGITS
        return _render(Decimal(repr(self.value)))

    def json_fields(self) -> dict:
        return {"numeric": repr(self.value), "rendered": self.rendered}


@dataclass(frozen=True)
class BoundResult:
    name: str
    params: dict
    side: str  # "upper" | "lower"
    value: AlgebraicValue | NumericValue
    assumptions: tuple[str, ...] = ()
    extras: dict = field(default_factory=dict)

    @property
    def advisory(self) -> bool:
        return isinstance(self.value, NumericValue)


def _frac(params: dict, key: str) -> Fraction:
    if key not in params:
        raise ValueError(f"missing required parameter {key!r}")
    return Fraction(params[key])


def _int(params: dict, key: str) -> int:
    if key not in params:
        raise ValueError(f"missing required parameter {key!r}")
    v = params[key]
    if int(v) != v:
        raise ValueError(f"parameter {key!r} must be an integer, got {v}")
    return int(v)


def _sqrt_monomial(coeff: Fraction, radicand: Fraction) -> AlgebraicValue:
    return AlgebraicValue(Fraction(0), coeff, radicand)


def _cliques_cap(r: int) -> Fraction:
    return Fraction(r ** 3 - r ** 2 - 4 * r, 2)


def _thm_main_a(p):
    c, i, r = _frac(p, "c"), _int(p, "i"), _int(p, "r")
    n, ex_value = _int(p, "n"), _frac(p, "ex_value")
    notes = ["hypothesis: ex(m, K_{r-1}, F') <= c*m^i for all m, with F K_r-free"]
    if not (0 <= i <= r - 1):
        notes.append(f"VIOLATED: need 0 <= i <= r-1, got i={i}")
    if c * Fraction(n) ** (i - 1) < _cliques_cap(r):
        notes.append("VIOLATED: needs c*n^(i-1) >= (r^3-r^2-4r)/2")
    value = AlgebraicValue.rational(2 * c * ex_value * Fraction(n) ** (i - 1) / r)
    return value, "upper", notes, {}


def _thm_main_b(p):
    r, ex_value = _int(p, "r"), _frac(p, "ex_value")
    notes = ["hypothesis: ex(m, K_{r-1}, F') <= c*m^i with c*n^(i-1) <= (r^3-r^2-4r)/2"]
    value = AlgebraicValue.rational((r * r - r - 4) * ex_value)
    return value, "upper", notes, {}


def _thm_main_c(p):
    c, i, r = _frac(p, "c"), _int(p, "i"), _int(p, "r")
    n, ex_value = _int(p, "n"), _frac(p, "ex_value")
    notes = ["asymptotic: stated for n large enough"]
    if i <= 1:
        notes.append(f"VIOLATED: needs i > 1, got i={i}")
    value = AlgebraicValue.rational(
        c * (r - 1) * ex_value ** i * Fraction(2, n) ** (i - 1))
    return value, "upper", notes, {}


def _furedi_k2t_ex(p):
    t, n = _int(p, "t"), _int(p, "n")
    notes = ["residual: + O(n^(4/3))"]
    if t < 2:
        notes.append("VIOLATED: needs t >= 2")
    value = _sqrt_monomial(Fraction(n, 2), Fraction((t - 1) * n))
    return value, "upper", notes, {}


def _furedi_bipartite(p):
    t, n = _int(p, "t"), _int(p, "n")
    notes = ["residual: + O(n^(4/3))", "bipartite Turán number with classes of size n"]
    if t < 2:
        notes.append("VIOLATED: needs t >= 2")
    value = _sqrt_monomial(Fraction(n), Fraction((t - 1) * n))
    return value, "upper", notes, {}


def _alon_shikhelman(p):
    t, n = _int(p, "t"), _int(p, "n")
    notes = ["residual: * (1 + o(1))"]
    value = _sqrt_monomial(Fraction((t - 1) * n, 6), Fraction((t - 1) * n))
    return value, "upper", notes, {}


def _luo(p):
    n, k, r = _int(p, "n"), _int(p, "k"), _int(p, "r")
    notes = ["equality attained when (k-1) divides n"]
    if not (n >= k >= 2 and r >= 1):
        notes.append(f"VIOLATED: needs n >= k >= 2 and r >= 1")
    value = AlgebraicValue.rational(Fraction(n, k - 1) * math.comb(k - 1, r))
    return value, "upper", notes, {}


def _fo_c2k_upper(p):
    k, ex_value = _int(p, "k"), _frac(p, "ex_value")
    notes = ["ex_value stands for ex(n, C_2k)"]
    if k < 2:
        notes.append("VIOLATED: needs k >= 2")
    value = AlgebraicValue.rational(Fraction(2 * k, 3) * ex_value)
    extras = {"clique_form": AlgebraicValue.rational(Fraction(2 * k - 3, 3) * ex_value)}
    return value, "upper", notes, extras


def _cor_maincor(p):
    t, n = _int(p, "t"), _int(p, "n")
    notes = ["residual: * (1 + o(1))"]
    if t < 7:
        notes.append(f"VIOLATED: asymptotic equality stated for t >= 7, got t={t}")
    value = _sqrt_monomial(Fraction((t - 1) * n, 6), Fraction((t - 1) * n))
    return value, "upper", notes, {}


def _cor_k2t_lower_r(p):
    t, n, r = _int(p, "t"), _int(p, "n"), _int(p, "r")
    notes = ["residual: * (1 + o(1))"]
    if not t > math.ceil(r / 2) - 2 or math.ceil(r / 2) - 2 < 0:
        notes.append(f"VIOLATED: needs t > ceil(r/2)-2 >= 0")
    value = _sqrt_monomial(Fraction(n, r * r), Fraction((t - 1) * n * r))
    return value, "lower", notes, {}


def _cor_k2t_upper_r(p):
    t, n, r = _int(p, "t"), _int(p, "n"), _int(p, "r")
    threshold = Fraction((r - 1) * (r ** 3 - r ** 2 - 4 * r), 2) + 1
    notes = ["residual: * (1 + o(1))"]
    if t >= threshold:
        notes.append(f"branch: t >= {threshold}, binomial coefficient form")
        value = _sqrt_monomial(Fraction(math.comb(t, r - 1) * n, r * t),
                               Fraction((t - 1) * n))
    else:
        notes.append(f"branch: t <= {threshold}, quadratic coefficient form")
        value = _sqrt_monomial(Fraction((r * r - r - 4) * n, 2), Fraction((t - 1) * n))
    return value, "upper", notes, {}


def _cor_even_cycle(p):
    k, ex_value = _int(p, "k"), _frac(p, "ex_value")
    notes = ["ex_value stands for ex(n, C_2k)"]
    if k < 5:
        notes.append(f"VIOLATED: stated for k >= 5, got k={k}")
    value = AlgebraicValue.rational(Fraction(2 * k - 3, 3) * ex_value)
    return value, "upper", notes, {}


def _cor_jiangma(p):
    k, r, ex_value = _int(p, "k"), _int(p, "r"), _frac(p, "ex_value")
    notes = ["ex_value stands for ex(n, C_2k)"]
    if not (k >= 2 and r >= 4):
        notes.append(f"VIOLATED: stated for k >= 2 and r >= 4")
    coeff = max(Fraction(math.comb(2 * k - 2, r - 1), r * (k - 1)),
                Fraction(r * r - r - 4))
    value = AlgebraicValue.rational(coeff * ex_value)
    return value, "upper", notes, {}


def _timmons_upper(p):
    t, n, r = _int(p, "t"), _int(p, "n"), _int(p, "r")
    notes = []
    if not (r >= 3 and t >= 1):
        notes.append("VIOLATED: needs r >= 3 and t >= 1")
    value = AlgebraicValue(Fraction(n, r), Fraction(n, r), Fraction(2 * (t + 1) * n))
    return value, "upper", notes, {}


def _thm_linearberge(p):
    t, n, r = _int(p, "t"), _int(p, "n"), _int(p, "r")
    notes = ["residual: + O(n)"]
    if not (r >= 2 and t >= 2):
        notes.append("VIOLATED: needs r, t >= 2")
    value = _sqrt_monomial(Fraction(n, r * (r - 1)), Fraction((t - 1) * n))
    return value, "upper", notes, {}


def _thm_linearlower(p):
    t, n = _int(p, "t"), _int(p, "n")
    notes = ["residual: + O(n)"]
    if not n >= t >= 2:
        notes.append("VIOLATED: needs n >= t >= 2")
    value = _sqrt_monomial(Fraction(n, 12), Fraction((t - 1) * n))
    return value, "lower", notes, {}


def _thm_linearlower2(p):
    t, n = _int(p, "t"), _int(p, "n")
    c = Fraction(p.get("c", 1))
    notes = [f"absolute constant c = {c} supplied by caller"]
    if t < 2:
        notes.append("VIOLATED: needs t >= 2")
    if t == 2:
        # log factor vanishes; the bound is exactly sqrt(t-1)/6 * n^(3/2)
        value = _sqrt_monomial(Fraction(n, 6), Fraction((t - 1) * n))
        return value, "lower", notes, {}
    factor = 1.0 - float(c) * math.log(t - 1) ** 1.5 / math.sqrt(t - 1)
    main = _sqrt_monomial(Fraction(n, 6), Fraction((t - 1) * n))
    notes.append("transcendental log factor evaluated in floating point; advisory")
    return NumericValue(factor * float(main)), "lower", notes, {"leading_term": main}


def _claim_clique_bound(p):
    c, x, n = _frac(p, "c"), _int(p, "x"), _int(p, "n")
    i, r, ex_value = _int(p, "i"), _int(p, "r"), _frac(p, "ex_value")
    notes = ["hypotheses: G is F-free with x edges; ex(n,F) <= ex_value; "
             "ex(m, K_{r-1}, F') <= c*m^i"]
    first = 2 * c * x * Fraction(n) ** (i - 1) / r
    second = c * x * (r - 1) * Fraction(2 * ex_value, n) ** (i - 1)
    value = AlgebraicValue.rational(min(first, second))
    extras = {"first_form": AlgebraicValue.rational(first),
              "second_form": AlgebraicValue.rational(second)}
    return value, "upper", notes, extras


CATALOG = {
    "thm_main_a": _thm_main_a,
    "thm_main_b": _thm_main_b,
    "thm_main_c": _thm_main_c,
    "furedi_k2t_ex": _furedi_k2t_ex,
    "furedi_bipartite": _furedi_bipartite,
    "alon_shikhelman": _alon_shikhelman,
    "luo": _luo,
    "fo_c2k_upper": _fo_c2k_upper,
    "cor_maincor": _cor_maincor,
    "cor_k2t_lower_r": _cor_k2t_lower_r,
    "cor_k2t_upper_r": _cor_k2t_upper_r,
    "cor_even_cycle": _cor_even_cycle,
    "cor_jiangma": _cor_jiangma,
    "timmons_upper": _timmons_upper,
    "thm_linearberge": _thm_linearberge,
    "thm_linearlower": _thm_linearlower,
    "thm_linearlower2": _thm_linearlower2,
    "claim_clique_bound": _claim_clique_bound,
}


def evaluate(name: str, params: dict) -> BoundResult:
    """Evaluate a catalog formula at concrete parameters.

    Domain violations are reported in the assumptions rather than raised;
    missing parameters raise ValueError. A "side" parameter overrides the
    entry's default direction (the asymptotic equalities serve as either)."""
    if name not in CATALOG:
        raise ValueError(f"unknown bound {name!r}; catalog: {sorted(CATALOG)}")
    clean = {k: v for k, v in params.items() if k != "side"}
    value, side, notes, extras = CATALOG[name](clean)
    if "side" in params:
        if params["side"] not in ("upper", "lower"):
            raise ValueError("side must be 'upper' or 'lower'")
        side = params["side"]
    return BoundResult(name=name, params=dict(clean), side=side, value=value,
                       assumptions=tuple(notes), extras=extras)


def cross_check(observed, bound: BoundResult) -> bool:
    """observed <= value for upper bounds, observed >= value for lower ones;
    exact when the value is algebraic (squared rational comparison)."""
    cmp = bound.value.compare(Fraction(observed))
    # cmp is the sign of (value - observed)
    if bound.side == "upper":
        return cmp >= 0
    return cmp <= 0
