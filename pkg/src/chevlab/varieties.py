"""Multivariate polynomials over F_q, variety records, exhaustive point
counting, and Bezout/degree bookkeeping.

Declared dimension and degree are caller inputs (no dimension theory here);
the point-count report checks them against the |V(F_q)| <= D q^d bound.
"""

from __future__ import annotations

import os
import re

from .errors import AmbientMismatch, AmbientTooLarge, ArityMismatch
from .logscaled import LogScaled


class Poly:
    """A multivariate polynomial: dict of exponent tuple -> nonzero coeff."""

    def __init__(self, F, nvars, terms):
        self.F = F
        self.nvars = nvars
        clean = {}
        for exps, coeff in (terms.items() if isinstance(terms, dict) else terms):
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ArityMismatch("exponent vector length != nvars")
            if exps in clean:
                raise ValueError("duplicate exponent vector {}".format(exps))
            coeff = coeff % F.q if F.e == 1 else coeff
            if coeff:
                clean[exps] = coeff
        self.terms = clean

    @property
    def total_degree(self):
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ArityMismatch("point length {} != nvars {}".format(
                len(point), self.nvars))
        F = self.F
        acc = 0
        for exps, coeff in self.terms.items():
            val = coeff
            for x, e in zip(point, exps):
                if e:
                    val = F.mul(val, F.pow(x, e))
            acc = F.add(acc, val)
        return acc

    def ser(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms):
            coeff = self.terms[exps]
            bits = [self.F.ser(coeff)]
            for i, e in enumerate(exps):
                if e == 1:
                    bits.append("x{}".format(i + 1))
                elif e > 1:
                    bits.append("x{}^{}".format(i + 1, e))
            parts.append("*".join(bits))
        return "+".join(parts)

    def __repr__(self):
        return "Poly({})".format(self.ser())


def evaluate(P, point):
    return P.evaluate(point)


_TERM_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def poly_parse(F, nvars, text):
    """Parse the text grammar: terms like '2*x1^3*x2' joined by '+'/'-'."""
    text = text.replace("−", "-").replace(" ", "")
    if not text:
        raise ValueError("empty polynomial text")
    # split into signed terms
    chunks = re.split(r"(?=[+-])", text)
    terms = {}
    for chunk in chunks:
        if not chunk:
            continue
        sign = 1
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = -1
            chunk = chunk[1:]
        coeff = F.from_int(sign)
        exps = [0] * nvars
        for factor in chunk.split("*"):
            if not factor:
                raise ValueError("malformed term in {!r}".format(text))
            m = _TERM_FACTOR.match(factor)
            if m:
                idx = int(m.group(1)) - 1
                if idx < 0 or idx >= nvars:
                    raise ArityMismatch("variable x{} out of range".format(idx + 1))
                exps[idx] += int(m.group(2) or 1)
            else:
                coeff = F.mul(coeff, F.from_int(int(factor)))
        key = tuple(exps)
        terms[key] = F.add(terms.get(key, 0), coeff)
    return Poly(F, nvars, {k: v for k, v in terms.items() if v})


class VarietySpec:
    """Ambient dimension, defining polynomials, declared dim and degree."""

    def __init__(self, ambient, polys, declared_dim, declared_deg):
        if declared_dim > ambient:
            raise ValueError("declared_dim exceeds the ambient dimension")
        if declared_deg < 1:
            raise ValueError("declared_deg must be >= 1")
        bezout = 1
        for P in polys:
            if P.nvars != ambient:
                raise AmbientMismatch("polynomial arity != ambient")
            bezout *= max(P.total_degree, 1)
        if declared_deg > bezout:
            raise ValueError(
                "declared_deg {} exceeds the Bezout budget {}".format(
                    declared_deg, bezout))
        self.ambient = ambient
        self.polys = list(polys)
        self.declared_dim = declared_dim
        self.declared_deg = declared_deg

    def contains(self, point):
        return all(P.evaluate(point) == 0 for P in self.polys)

    def __repr__(self):
        return "VarietySpec(ambient={}, dim={}, deg={}, {} polys)".format(
            self.ambient, self.declared_dim, self.declared_deg, len(self.polys))


def _count_range(V, F, lo, hi):
    """Count points whose odometer index lies in [lo, hi)."""
    m = V.ambient
    q = F.q
    count = 0
    point = [0] * m
    for idx in range(lo, hi):
        v = idx
        for i in range(m - 1, -1, -1):
            point[i] = v % q
            v //= q
        if V.contains(point):
            count += 1
    return count


def point_count(V, F, cap=10 ** 8, workers=None):
    """Exact |V(F_q)| by exhaustive odometer scan, with the D q^d report.

    workers defaults to the CHEVLAB_WORKERS environment variable (or 1); the
    count is a deterministic in-order sum, so the worker count never changes
    the result, only the wall time.
    """
    total = F.q ** V.ambient
    if total > cap:
        raise AmbientTooLarge("q^ambient = {} exceeds cap {}".format(total, cap))
    if workers is None:
        workers = int(os.environ.get("CHEVLAB_WORKERS", "1"))
    workers = max(1, int(workers))
    bounds = [total * i // workers for i in range(workers + 1)]
    chunks = [(bounds[i], bounds[i + 1]) for i in range(workers)]
    if workers == 1:
        partials = [_count_range(V, F, 0, total)]
    else:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(lambda c: _count_range(V, F, *c), chunks))
    count = 0
    for part in partials:  # deterministic in-order sum
        count += part
    bound = V.declared_deg * F.q ** V.declared_dim
    return {
        "count": count,
        "bound": bound,
        "pass": count <= bound,
        "ambient": V.ambient,
        "declared_dim": V.declared_dim,
        "declared_deg": V.declared_deg,
        "q": F.q,
    }


def bezout_degree(parts, op):
    """Degree budgets: union adds, intersect/product multiply."""
    if not parts:
        raise ValueError("no parts")
    if op in ("union", "intersect"):
        ambient = parts[0].ambient
        if any(p.ambient != ambient for p in parts):
            raise AmbientMismatch("incompatible ambients for {}".format(op))
    if op == "union":
        return LogScaled.from_exact(sum(p.declared_deg for p in parts))
    if op in ("intersect", "product"):
        prod = 1
        for p in parts:
            prod *= p.declared_deg
        return LogScaled.from_exact(prod)
    raise ValueError("unknown op {!r}".format(op))


def image_degree_bound(V, map_degree, image_dim):
    """deg(f(V)) <= deg(V) deg(f)^dim."""
    if map_degree < 1:
        raise ValueError("map_degree must be >= 1")
    return LogScaled.from_exact(V.declared_deg * map_degree ** image_dim)


def intersection_chain_budget(d, D):
    """D^(d+1), the degree budget for intersections of dim <= d, deg <= D."""
    if D < 1 or d < 0:
        raise ValueError("need D >= 1 and d >= 0")
    return LogScaled.power(D, d + 1)


# --- text file format ---

def variety_loads(F, text):
    """Load a variety from the text format: header 'ambient=m dim=d deg=D'
    then one polynomial per line."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty variety file")
    header = dict(kv.split("=") for kv in lines[0].split())
    ambient = int(header["ambient"])
    polys = [poly_parse(F, ambient, ln) for ln in lines[1:]]
    return VarietySpec(ambient, polys, int(header["dim"]), int(header["deg"]))


def variety_dumps(V):
    out = ["ambient={} dim={} deg={}".format(
        V.ambient, V.declared_dim, V.declared_deg)]
    out.extend(P.ser() for P in V.polys)
    return "\n".join(out) + "\n"
