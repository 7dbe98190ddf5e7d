"""Layered breadth-first closure engine for matrix groups.

Two code paths with identical, deterministic semantics:
  * a numpy fast path for prime fields with p < 256 (matrices become uint8
    byte-string keys; layer products are batched matrix multiplications);
  * a pure-python fallback for extension fields or large p (tuple keys).

Insertion order is generator-major then frontier-order, fixed by the input
generator list, so depth tables and ball series are schedule-independent.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import BallCapExceeded


class Ball:
    """The result of a layered closure: depth table, ball series, elements."""

    def __init__(self, F, N, depths, sizes, saturated_at, elements, use_numpy):
        self.F = F
        self.N = N
        self.depths = depths          # key -> word length
        self.sizes = sizes            # sizes[t-1] = |A^t|
        self.saturated_at = saturated_at
        self.elements = elements      # BFS order; np.int64 (M,N,N) or list of tuples
        self.use_numpy = use_numpy

    def __len__(self):
        return len(self.depths)

    def key_of(self, mat):
        if self.use_numpy:
            return bytes(bytearray(x % self.F.p for x in mat))
        return tuple(mat)

    def __contains__(self, mat):
        return self.key_of(mat) in self.depths

    def depth_of(self, mat):
        return self.depths.get(self.key_of(mat))

    def mats(self):
        """Iterate elements as flat tuples in BFS order."""
        if self.use_numpy:
            N = self.N
            for m in self.elements.reshape(-1, N * N):
                yield tuple(int(x) for x in m)
        else:
            for m in self.elements:
                yield m

    def mat_array(self):
        """Elements as an (M, N, N) int64 array (numpy path only)."""
        return self.elements


def _can_use_numpy(F):
    return F.e == 1 and F.p < 256


def key_of(F, mat):
    """The canonical hash key for a flat matrix, matching Ball.key_of."""
    if _can_use_numpy(F):
        return bytes(bytearray(x % F.p for x in mat))
    return tuple(mat)


def closure(F, N, gens, cap=10 ** 7, t_max=None):
    """BFS over words in `gens` starting from the identity.

    Returns a Ball whose sizes sequence is |A^1|, |A^2|, ... up to t_max or
    saturation.  Requires the identity to be in the generated ball semantics:
    sizes are cumulative (gens should contain the identity for |A^t| to mean
    the t-ball of A literally).
    """
    if _can_use_numpy(F):
        return _closure_numpy(F, N, gens, cap, t_max)
    return _closure_python(F, N, gens, cap, t_max)


def _closure_numpy(F, N, gens, cap, t_max):
    p = F.p
    stride = N * N
    gen_arr = np.array([np.array(g, dtype=np.int64).reshape(N, N) % p
                        for g in gens])
    ident = np.eye(N, dtype=np.int64)
    depths = {ident.astype(np.uint8).tobytes(): 0}
    chunks = [ident.reshape(1, N, N)]
    frontier = chunks[0]
    sizes = []
    saturated_at = None
    t = 0
    while True:
        t += 1
        prods = np.concatenate([frontier @ g % p for g in gen_arr], axis=0)
        rows = prods.reshape(-1, stride).astype(np.uint8)
        data = rows.tobytes()
        new_idx = []
        pos = 0
        for i in range(rows.shape[0]):
            key = data[pos:pos + stride]
            pos += stride
            if key not in depths:
                depths[key] = t
                new_idx.append(i)
        if not new_idx:
            saturated_at = t - 1
            if sizes:
                sizes.append(sizes[-1])
            else:
                sizes.append(len(depths))
            break
        frontier = prods[new_idx]
        chunks.append(frontier)
        sizes.append(len(depths))
        if len(depths) > cap:
            raise BallCapExceeded("closure exceeded cap {}".format(cap))
        if t_max is not None and t >= t_max:
            break
    elements = np.concatenate(chunks, axis=0)
    return Ball(F, N, depths, sizes, saturated_at, elements, True)


def _closure_python(F, N, gens, cap, t_max):
    gens = [tuple(g) for g in gens]
    ident = linalg.identity(N)
    depths = {ident: 0}
    elements = [ident]
    frontier = [ident]
    sizes = []
    saturated_at = None
    t = 0
    while True:
        t += 1
        new = []
        for g in gens:
            for x in frontier:
                prod = linalg.mat_mul(F, N, x, g)
                if prod not in depths:
                    depths[prod] = t
                    new.append(prod)
        if not new:
            saturated_at = t - 1
            sizes.append(len(depths))
            break
        frontier = new
        elements.extend(new)
        sizes.append(len(depths))
        if len(depths) > cap:
            raise BallCapExceeded("closure exceeded cap {}".format(cap))
        if t_max is not None and t >= t_max:
            break
    return Ball(F, N, depths, sizes, saturated_at, elements, False)


def orbit_closure(F, N, gens, start, cap=10 ** 7):
    """Orbit of `start` under conjugation x -> g x g^-1 by the generators."""
    if _can_use_numpy(F):
        p = F.p
        stride = N * N
        garr = [np.array(g, dtype=np.int64).reshape(N, N) % p for g in gens]
        giarr = [np.array(linalg.inv(F, N, tuple(g)), dtype=np.int64).reshape(N, N) % p
                 for g in gens]
        s = np.array(start, dtype=np.int64).reshape(1, N, N) % p
        seen = {s.astype(np.uint8).tobytes()}
        frontier = s
        total = 1
        while frontier.shape[0]:
            prods = np.concatenate(
                [g @ frontier @ gi % p for g, gi in zip(garr, giarr)], axis=0)
            rows = prods.reshape(-1, stride).astype(np.uint8)
            data = rows.tobytes()
            new_idx = []
            pos = 0
            for i in range(rows.shape[0]):
                key = data[pos:pos + stride]
                pos += stride
                if key not in seen:
                    seen.add(key)
                    new_idx.append(i)
            frontier = prods[new_idx]
            total += len(new_idx)
            if total > cap:
                raise BallCapExceeded("orbit exceeded cap {}".format(cap))
        return seen
    seen = {tuple(start)}
    frontier = [tuple(start)]
    ginvs = [linalg.inv(F, N, tuple(g)) for g in gens]
    while frontier:
        new = []
        for g, gi in zip(gens, ginvs):
            for x in frontier:
                y = linalg.mat_mul(F, N, linalg.mat_mul(F, N, g, x), gi)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        frontier = new
        if len(seen) > cap:
            raise BallCapExceeded("orbit exceeded cap")
    return seen
