"""Growth functions, decency certificates, and the constants they induce.

A non-decreasing f is (delta, C, s)-decent when, on [s, infinity),
log2 x <= f(x) <= C * x^(1-delta) (moderate growth) and
f(xy) <= C * f(x) * f(y) (sub-multiplicativity).  The built-in families
carry analytic certificates; everything else can only be *falsified* on a
grid, never proven, and the API keeps that distinction explicit.

All logarithms exposed to callers are base 2, matching label sizes measured
in bits; any constant base change is absorbed into scale factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

#: Relative tolerance for grid comparisons (doubles only, never proofs).
GRID_RTOL = 1e-9


def log2(x: float) -> float:
    return math.log2(x)


@dataclass(frozen=True)
class DecencyCertificate:
    """Parameters (delta, C, s) witnessing moderate growth and
    sub-multiplicativity on [s, infinity)."""

    delta: float
    C: float
    s: float

    def __post_init__(self):
        if not (0 < self.delta < 1):
            raise DomainError(f"delta must lie in (0,1), got {self.delta}")
        if self.C < 1:
            raise DomainError(f"C must be at least 1, got {self.C}")
        if self.s < 2:
            raise DomainError(f"s must be at least 2, got {self.s}")


@dataclass(frozen=True)
class GrowthFunction:
    """One of the built-in growth-function families.

    kinds and parameters:
      log        beta * log2(x)                  (beta)
      pow        alpha * x**d                    (alpha, d)
      explog     exp(alpha * (ln x)**d)          (alpha, d)
      exploglog  exp(beta * (ln log2 x)**gamma)  (beta, gamma)
      scale      beta * child(x)                 (beta, children[0])
      prod       children[0](x) * children[1](x)
      parity     log2 x at odd integers, sqrt(x) at even ones; a demonstration
                 function with no certificate (it is not sub-multiplicative)
    """

    kind: str
    alpha: float | None = None
    beta: float | None = None
    gamma: float | None = None
    d: float | None = None
    children: tuple["GrowthFunction", ...] = ()

    def value(self, x: float) -> float:
        if x < 2:
            raise DomainError(f"growth functions are evaluated on [2, inf), got {x}")
        if self.kind == "log":
            return self.beta * math.log2(x)
        if self.kind == "pow":
            return self.alpha * x**self.d
        if self.kind == "explog":
            return math.exp(self.alpha * math.log(x) ** self.d)
        if self.kind == "exploglog":
            return math.exp(self.beta * math.log(math.log2(x)) ** self.gamma)
        if self.kind == "scale":
            return self.beta * self.children[0].value(x)
        if self.kind == "prod":
            return self.children[0].value(x) * self.children[1].value(x)
        if self.kind == "parity":
            k = round(x)
            if abs(x - k) > 1e-9:
                raise DomainError("the parity function is defined on integers only")
            return math.log2(k) if k % 2 else math.sqrt(k)
        raise DomainError(f"unknown growth function kind {self.kind!r}")

    def spec(self) -> str:
        """Render back into the CLI mini-language."""
        if self.kind == "log":
            return "log" if self.beta == 1 else f"log*{_fmt(self.beta)}"
        if self.kind == "pow":
            return f"pow:{_fmt(self.alpha)}:{_fmt(self.d)}"
        if self.kind == "explog":
            return f"explog:{_fmt(self.alpha)}:{_fmt(self.d)}"
        if self.kind == "exploglog":
            return f"exploglog:{_fmt(self.beta)}:{_fmt(self.gamma)}"
        if self.kind == "scale":
            return f"scale:{_fmt(self.beta)}({self.children[0].spec()})"
        if self.kind == "prod":
            return f"prod({self.children[0].spec()},{self.children[1].spec()})"
        return self.kind


def _fmt(x: float) -> str:
    return format(x, "g")


def log_growth(beta: float = 1.0) -> GrowthFunction:
    return GrowthFunction("log", beta=beta)


def power_growth(alpha: float, d: float) -> GrowthFunction:
    return GrowthFunction("pow", alpha=alpha, d=d)


def parse_growth_spec(text: str) -> GrowthFunction:
    """Parse the mini-language: log, log*B, pow:A:D, explog:A:D,
    exploglog:B:G, prod(spec,spec), scale:B(spec), parity."""
    text = text.strip()
    if not text:
        raise DomainError("empty growth function spec")
    if text == "log":
        return log_growth()
    if text == "parity":
        return GrowthFunction("parity")
    if text.startswith("log*"):
        return log_growth(_parse_real(text[4:]))
    if text.startswith("pow:"):
        a, d = _split_params(text[4:], 2)
        return power_growth(a, d)
    if text.startswith("explog:"):
        a, d = _split_params(text[7:], 2)
        return GrowthFunction("explog", alpha=a, d=d)
    if text.startswith("exploglog:"):
        b, g = _split_params(text[10:], 2)
        return GrowthFunction("exploglog", beta=b, gamma=g)
    if text.startswith("scale:"):
        rest = text[6:]
        open_idx = rest.find("(")
        if open_idx < 0 or not rest.endswith(")"):
            raise DomainError(f"malformed scale spec: {text!r}")
        beta = _parse_real(rest[:open_idx])
        return GrowthFunction(
            "scale", beta=beta, children=(parse_growth_spec(rest[open_idx + 1 : -1]),)
        )
    if text.startswith("prod(") and text.endswith(")"):
        inner = text[5:-1]
        depth = 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                left, right = inner[:i], inner[i + 1 :]
                return GrowthFunction(
                    "prod",
                    children=(parse_growth_spec(left), parse_growth_spec(right)),
                )
        raise DomainError(f"prod spec needs two comma-separated parts: {text!r}")
    raise DomainError(f"unknown growth function spec: {text!r}")


def _parse_real(s: str) -> float:
    try:
        return float(s)
    except ValueError:
        raise DomainError(f"not a real number: {s!r}") from None


def _split_params(s: str, count: int) -> list[float]:
    parts = s.split(":")
    if len(parts) != count:
        raise DomainError(f"expected {count} ':'-separated parameters, got {s!r}")
    return [_parse_real(p) for p in parts]


# ---------------------------------------------------------------------------
# Certificates for the built-in families.


def _rising_root(check, start: float) -> float:
    """Smallest t >= start with check(t) true, assuming check is monotone
    (false then true) beyond start.  Doubling then bisection, 200 rounds."""
    lo = start
    if check(lo):
        return lo
    hi = lo * 2
    for _ in range(200):
        if check(hi):
            break
        lo, hi = hi, hi * 2
    else:
        raise DomainError("no threshold found within doubling budget")
    for _ in range(200):
        mid = (lo + hi) / 2
        if check(mid):
            hi = mid
        else:
            lo = mid
    return hi


def certify_builtin(f: GrowthFunction) -> DecencyCertificate:
    """Analytic decency certificate for a built-in family.

    log (beta>=1):        (1/2, beta, max(16, 2^(2 beta)))
    pow (alpha>0, 0<d<1): (1-d, max(alpha, 1/alpha), (2/(d*max(alpha,1)))^(2/d))
    explog, exploglog:    delta = 1/2 and C = 1, with the domain start s solved
                          from the defining inequalities (each comparison
                          function is monotone beyond an explicit point, so a
                          single threshold certifies the whole tail)
    scale:                child certificate with C multiplied by beta
    prod:                 componentwise certificate, needs delta_g+delta_h > 1
    """
    if f.kind == "log":
        if f.beta < 1:
            raise DomainError("log scale factor must be >= 1 for a certificate")
        return DecencyCertificate(0.5, f.beta, max(16.0, 2.0 ** (2 * f.beta)))
    if f.kind == "pow":
        if not (f.alpha > 0 and 0 < f.d < 1):
            raise DomainError("pow needs alpha > 0 and d in (0,1)")
        s = (2 / (f.d * max(f.alpha, 1.0))) ** (2 / f.d)
        return DecencyCertificate(1 - f.d, max(f.alpha, 1 / f.alpha), max(s, 2.0))
    if f.kind == "explog":
        if not (f.alpha > 0 and 0 < f.d < 1):
            raise DomainError("explog needs alpha > 0 and d in (0,1)")
        alpha, d = f.alpha, f.d
        # Upper bound with delta=1/2: alpha*t^d <= t/2 for t >= (2 alpha)^(1/(1-d)).
        t_upper = (2 * alpha) ** (1 / (1 - d))
        # Lower bound: alpha*t^d >= ln(t/ln 2); the gap is increasing once
        # t > (1/(alpha d))^(1/d), so the first crossing certifies the tail.
        t_mono = (1 / (alpha * d)) ** (1 / d)
        t_lower = _rising_root(
            lambda t: alpha * t**d >= math.log(t / math.log(2)), max(t_mono, 1.0)
        )
        s = math.exp(max(t_upper, t_lower))
        return DecencyCertificate(0.5, 1.0, max(s, 2.0))
    if f.kind == "exploglog":
        if not (f.beta >= 1 and f.gamma >= 1):
            raise DomainError("exploglog needs beta >= 1 and gamma >= 1")
        beta, gamma = f.beta, f.gamma
        # In u = log2 x: upper bound needs beta*(ln u)^gamma <= u*ln(2)/2,
        # monotone beyond u = e^gamma; the lower bound ln u <= beta*(ln u)^gamma
        # holds for u >= e; sub-multiplicativity needs u >= e^gamma.
        u0 = math.exp(gamma)
        u1 = _rising_root(
            lambda u: beta * math.log(u) ** gamma <= u * math.log(2) / 2, u0
        )
        return DecencyCertificate(0.5, 1.0, max(2.0 ** u1, 2.0))
    if f.kind == "scale":
        if f.beta < 1:
            raise DomainError("scale factor must be >= 1 for a certificate")
        child = certify_builtin(f.children[0])
        return DecencyCertificate(child.delta, f.beta * child.C, child.s)
    if f.kind == "prod":
        cg = certify_builtin(f.children[0])
        ch = certify_builtin(f.children[1])
        delta = cg.delta + ch.delta - 1
        if delta <= 0:
            raise DomainError(
                "componentwise product certificate needs delta_g + delta_h > 1"
            )
        return DecencyCertificate(delta, cg.C * ch.C, max(cg.s, ch.s))
    raise DomainError(f"no analytic certificate for kind {f.kind!r}")


# ---------------------------------------------------------------------------
# Grid falsification.


@dataclass(frozen=True)
class Counterexample:
    """A grid point (or pair) where a claimed certificate fails.

    kind is one of 'lower' (f below log2), 'upper' (f above C x^(1-delta)),
    'submult' (f(xy) above C f(x) f(y)).  For 'submult', y is the second point
    and pair_index counts how many pairs were examined up to and including
    this one; for single-point kinds, y is None.
    """

    kind: str
    x: float
    y: float | None
    lhs: float
    rhs: float
    pair_index: int | None = None


def geometric_grid(lo: float, hi: float, points: int = 400) -> list[float]:
    if lo < 2 or hi <= lo or points < 2:
        raise DomainError("need 2 <= lo < hi and at least two points")
    ratio = (hi / lo) ** (1 / (points - 1))
    return [lo * ratio**i for i in range(points)]


def integer_grid(lo: int, count: int) -> list[float]:
    return [float(lo + i) for i in range(count)]


def standard_grid(cert: DecencyCertificate, hi: float = 1e6, points: int = 400) -> list[float]:
    """Geometric grid [s, hi]; empty when s already exceeds hi."""
    if cert.s >= hi:
        return []
    return geometric_grid(cert.s, hi, points)


def _violates(lhs: float, rhs: float) -> bool:
    return lhs > rhs * (1 + GRID_RTOL) + 1e-12


def falsify_decency(
    f,
    cert: DecencyCertificate,
    grid: list[float],
    max_product: float | None = None,
) -> Counterexample | None:
    """Search a grid for violations of moderate growth or sub-multiplicativity.

    ``f`` is a GrowthFunction or any callable.  Points are checked in order,
    then pairs (x_i, x_j) with i <= j in lexicographic order of indices,
    skipping pairs whose product exceeds ``max_product`` (default 10^6, or
    the largest grid value if that is bigger).  A None result is evidence,
    not a proof.
    """
    value = f.value if hasattr(f, "value") else f
    for x in grid:
        if x < cert.s * (1 - GRID_RTOL):
            raise DomainError(f"grid point {x} below certificate start s={cert.s}")
    if max_product is None:
        max_product = max(1e6, grid[-1]) if grid else 0.0
    for x in grid:
        fx = value(x)
        if _violates(math.log2(x), fx):
            return Counterexample("lower", x, None, math.log2(x), fx)
        bound = cert.C * x ** (1 - cert.delta)
        if _violates(fx, bound):
            return Counterexample("upper", x, None, fx, bound)
    pair_index = 0
    for i, x in enumerate(grid):
        for y in grid[i:]:
            if x * y > max_product:
                break
            pair_index += 1
            lhs = value(x * y)
            rhs = cert.C * value(x) * value(y)
            if _violates(lhs, rhs):
                return Counterexample("submult", x, y, lhs, rhs, pair_index)
    return None


# ---------------------------------------------------------------------------
# Constants and inequality chains behind the random-graph density bound.


@dataclass(frozen=True)
class ScaleConstants:
    """The explicit density scale: c1 governs the small-subgraph regime,
    c2 the large one, and c = max(c1, c2, s(s-1)/2) is the scale at which
    sparse random graphs stay good with probability 1 - n^-2."""

    c1: float
    c2: float
    c: float


def scale_constants(cert: DecencyCertificate, gamma: float) -> ScaleConstants:
    """c1 = 15 e C^4 gamma / delta and c2 = C^2 s e^2 gamma; c2 always
    exceeds 6 on valid inputs since C >= 1, s >= 2 and gamma > 1."""
    if gamma <= 1:
        raise DomainError(f"gamma must exceed 1, got {gamma}")
    c1 = math.e * 15 * cert.C**4 * gamma / cert.delta
    c2 = cert.C**2 * cert.s * math.e**2 * gamma
    c = max(c1, c2, cert.s * (cert.s - 1) / 2)
    return ScaleConstants(c1, c2, c)


@dataclass(frozen=True)
class RegimeCheck:
    """One evaluated inequality chain: lhs = f(k)/f(n) against the stated
    lower bound, plus the induced Chernoff argument 1+a and its floor."""

    rhs: float
    holds: bool
    in_derivation_range: bool
    chernoff_arg: float
    chernoff_floor: float
    chernoff_ok: bool


@dataclass(frozen=True)
class RatioReport:
    n: float
    k: float
    lhs: float
    regime: str
    large_k: RegimeCheck
    small_k: RegimeCheck | None

    @property
    def violations(self) -> list[str]:
        out = []
        if self.large_k.in_derivation_range and not self.large_k.holds:
            out.append("large_k")
        if (
            self.small_k is not None
            and self.small_k.in_derivation_range
            and not self.small_k.holds
        ):
            out.append("small_k")
        return out


def ratio_inequalities(
    f, cert: DecencyCertificate, gamma: float, n: float, k: float
) -> RatioReport:
    """Evaluate the two lower bounds on f(k)/f(n) used to control subgraph
    densities, at a concrete (n, k).

    The first chain, f(k)/f(n) >= k/(C^2 s n), is derivable for every
    s <= k <= n.  The second, f(k)/f(n) >= (k log2 k / (C^4 n)) * n^(delta/3),
    applies in the small regime k^2 <= n and its derivation additionally needs
    n^(2/3)/(k (log2 k)^(1/delta)) >= s and n^(1/3) (log2 k)^(1/delta) >= s;
    the report records whether those side conditions hold.
    """
    if not (cert.s <= k <= n):
        raise DomainError(f"need s <= k <= n, got s={cert.s}, k={k}, n={n}")
    if gamma <= 1:
        raise DomainError(f"gamma must exceed 1, got {gamma}")
    consts = scale_constants(cert, gamma)
    fk, fn = f.value(k), f.value(n)
    lhs = fk / fn
    C = cert.C

    rhs1 = k / (C**2 * cert.s * n)
    arg1 = 2 * consts.c2 * n * fk / (gamma * (k - 1) * fn) if k > 1 else math.inf
    check1 = RegimeCheck(
        rhs=rhs1,
        holds=lhs >= rhs1 * (1 - GRID_RTOL),
        in_derivation_range=True,
        chernoff_arg=arg1,
        chernoff_floor=math.e**2,
        chernoff_ok=arg1 > math.e**2,
    )

    check2 = None
    if k * k <= n:
        log_k = math.log2(k)
        rhs2 = (k * log_k / (C**4 * n)) * n ** (cert.delta / 3)
        d_exp = 1 / cert.delta
        in_range = (
            n ** (2 / 3) / (k * log_k**d_exp) >= cert.s
            and n ** (1 / 3) * log_k**d_exp >= cert.s
        )
        arg2 = (
            2 * consts.c1 * n * fk / (gamma * (k - 1) * fn * log_k)
            if k > 1
            else math.inf
        )
        floor2 = math.e * n ** (cert.delta / 3)
        check2 = RegimeCheck(
            rhs=rhs2,
            holds=lhs >= rhs2 * (1 - GRID_RTOL),
            in_derivation_range=in_range,
            chernoff_arg=arg2,
            chernoff_floor=floor2,
            chernoff_ok=arg2 > floor2,
        )

    return RatioReport(
        n=n,
        k=k,
        lhs=lhs,
        regime="small_k" if k * k <= n else "large_k",
        large_k=check1,
        small_k=check2,
    )
