"""Spin lattices: sites of arbitrary spin magnitude, weighted bilinear and
biquadratic couplings, uniform field, and the dense Hamiltonians they
generate.  Conventions: hbar = 1; "spin" uses S operators, "pauli" uses
sigma = 2S (the usual choice for spin-1/2 rings)."""

import json
from dataclasses import dataclass, field

import numpy as np

from bellforge.errors import DimensionError, DomainError

MAX_DIM = 4096


def spin_matrices(l) -> np.ndarray:
    """(Sx, Sy, Sz) for spin magnitude l, stacked as shape (3, d, d)."""
    d = int(round(2 * l + 1))
    if abs(2 * l + 1 - d) > 1e-12 or d < 1:
        raise DomainError(f"spin magnitude {l} is not half-integer")
    m = l - np.arange(d)
    sz = np.diag(m)
    lp = np.sqrt(l * (l + 1) - m[1:] * (m[1:] + 1))
    splus = np.diag(lp, 1)
    sx = (splus + splus.T) / 2
    sy = (splus - splus.T) / (2j)
    return np.stack([sx.astype(complex), sy, sz.astype(complex)])


@dataclass(frozen=True)
class SpinLattice:
    """Sites with spin magnitudes, coupling edges (i, j, J_bilinear,
    J_biquadratic), a uniform field 3-vector and per-edge anisotropy
    weights (axis weights of the bilinear term; (1,1,1) = isotropic,
    (0,0,1) = Ising)."""

    sites: tuple
    edges: tuple
    field: tuple = (0.0, 0.0, 0.0)
    anisotropy: tuple | None = None
    convention: str = "spin"
    name: str = ""

    def __post_init__(self):
        sites = tuple(float(l) for l in self.sites)
        object.__setattr__(self, "sites", sites)
        edges = tuple(
            (int(i), int(j), float(jb), float(jq)) for (i, j, jb, jq) in self.edges
        )
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "field", tuple(float(b) for b in self.field))
        if self.anisotropy is None:
            aniso = tuple((1.0, 1.0, 1.0) for _ in edges)
        else:
            aniso = tuple(tuple(float(w) for w in ws) for ws in self.anisotropy)
        object.__setattr__(self, "anisotropy", aniso)
        if len(aniso) != len(edges):
            raise DimensionError("need one anisotropy triple per edge")
        n = len(sites)
        for i, j, _, _ in edges:
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise DimensionError(f"bad edge ({i},{j}) for {n} sites")
        if self.convention not in ("spin", "pauli"):
            raise DomainError(f"unknown convention {self.convention!r}")
        if self.dim > MAX_DIM:
            raise DimensionError(f"Hilbert dimension {self.dim} exceeds {MAX_DIM}")

    @property
    def n_sites(self) -> int:
        return len(self.sites)

    @property
    def dims(self) -> tuple:
        return tuple(int(round(2 * l + 1)) for l in self.sites)

    @property
    def dim(self) -> int:
        return int(np.prod(self.dims))

    @property
    def is_isotropic(self) -> bool:
        return all(ws == (1.0, 1.0, 1.0) for ws in self.anisotropy)

    @property
    def field_is_zero(self) -> bool:
        return all(b == 0.0 for b in self.field)

    def site_operators(self, site: int) -> np.ndarray:
        ops = spin_matrices(self.sites[site])
        if self.convention == "pauli":
            ops = 2.0 * ops
        return ops

    def to_json(self) -> str:
        return json.dumps(
            {
                "schema": 1,
                "sites": list(self.sites),
                "edges": [list(e) for e in self.edges],
                "field": list(self.field),
                "anisotropy": [list(a) for a in self.anisotropy],
                "convention": self.convention,
                "name": self.name,
            },
            sort_keys=True,
        )


def lattice_from_json(text: str) -> SpinLattice:
    data = json.loads(text)
    return SpinLattice(
        sites=tuple(data["sites"]),
        edges=tuple(tuple(e) for e in data["edges"]),
        field=tuple(data.get("field", (0.0, 0.0, 0.0))),
        anisotropy=(
            tuple(tuple(a) for a in data["anisotropy"])
            if data.get("anisotropy")
            else None
        ),
        convention=data.get("convention", "spin"),
        name=data.get("name", ""),
    )


def _embed_two_site(dims, i, j, op2) -> np.ndarray:
    """Dense embedding of a two-site operator acting on sites (i, j)."""
    n = len(dims)
    rest = [k for k in range(n) if k not in (i, j)]
    d_rest = int(np.prod([dims[k] for k in rest], initial=1))
    big = np.kron(op2, np.eye(d_rest, dtype=op2.dtype))
    order = [i, j] + rest
    perm_dims = [dims[k] for k in order]
    t = big.reshape(perm_dims + perm_dims)
    inv = np.argsort(order)
    t = t.transpose(list(inv) + [n + k for k in inv])
    d = int(np.prod(dims))
    return np.ascontiguousarray(t.reshape(d, d))


def _embed_one_site(dims, i, op1) -> np.ndarray:
    n = len(dims)
    rest = [k for k in range(n) if k != i]
    d_rest = int(np.prod([dims[k] for k in rest], initial=1))
    big = np.kron(op1, np.eye(d_rest, dtype=op1.dtype))
    order = [i] + rest
    perm_dims = [dims[k] for k in order]
    t = big.reshape(perm_dims + perm_dims)
    inv = np.argsort(order)
    t = t.transpose(list(inv) + [n + k for k in inv])
    d = int(np.prod(dims))
    return np.ascontiguousarray(t.reshape(d, d))


def _realify(m: np.ndarray) -> np.ndarray:
    if np.iscomplexobj(m) and np.abs(m.imag).max() < 1e-12:
        return np.ascontiguousarray(m.real)
    return m


def build_hamiltonian(lat: SpinLattice) -> np.ndarray:
    """Dense Hamiltonian: per edge sum_axis w_axis S_axis x S_axis plus the
    biquadratic square of the isotropic dot product, plus field . sum_i S_i
    (operators per the lattice convention)."""
    dims = lat.dims
    d = lat.dim
    h = None
    for (i, j, jb, jq), ws in zip(lat.edges, lat.anisotropy):
        si = lat.site_operators(i)
        sj = lat.site_operators(j)
        di, dj = dims[i], dims[j]
        edge = np.zeros((di * dj, di * dj), dtype=complex)
        dot = np.zeros_like(edge)
        for a in range(3):
            dot += np.kron(si[a], sj[a])
        for a in range(3):
            if ws[a] != 0.0:
                edge += jb * ws[a] * np.kron(si[a], sj[a])
        if jq != 0.0:
            edge += jq * (dot @ dot)
        edge = _realify(edge)
        term = _embed_two_site(dims, i, j, edge)
        h = term if h is None else h + term
    if not lat.field_is_zero:
        for i in range(lat.n_sites):
            si = lat.site_operators(i)
            a1 = sum(lat.field[a] * si[a] for a in range(3))
            a1 = _realify(np.asarray(a1))
            term = _embed_one_site(dims, i, a1)
            h = term if h is None else h + term
    if h is None:
        h = np.zeros((d, d))
    return _realify(h)


def magnetization_ops(lat: SpinLattice) -> np.ndarray:
    """Total-spin components sum_i S_a^(i) stacked as (3, dim, dim); always
    in the spin convention (witness thresholds assume S operators)."""
    dims = lat.dims
    d = lat.dim
    out = np.zeros((3, d, d), dtype=complex)
    for i in range(lat.n_sites):
        ops = spin_matrices(lat.sites[i])
        for a in range(3):
            out[a] += _embed_one_site(dims, i, ops[a])
    return out


# ---------------------------------------------------------------------------
# model factories


def _ring_edges(n, jb, jq=0.0):
    if n == 2:  # a two-site "ring" is a single bond, not a doubled one
        return ((0, 1, jb, jq),)
    return tuple((i, (i + 1) % n, jb, jq) for i in range(n))


def xxx_ring(n: int, j: float = 1.0, l: float = 0.5, convention: str = "pauli") -> SpinLattice:
    """Isotropic Heisenberg ring of n spins-l with coupling j."""
    return SpinLattice(
        sites=(l,) * n, edges=_ring_edges(n, j), convention=convention,
        name=f"xxx_ring{n}",
    )


def xxx_chain(n: int, j: float = 1.0, l: float = 0.5, convention: str = "pauli") -> SpinLattice:
    return SpinLattice(
        sites=(l,) * n,
        edges=tuple((i, i + 1, j, 0.0) for i in range(n - 1)),
        convention=convention,
        name=f"xxx_chain{n}",
    )


def xxz_ring(n: int, j: float, j3: float, b: float = 0.0) -> SpinLattice:
    """xx ring with tunable zz coupling and a z field (Pauli convention)."""
    aniso = tuple((1.0, 1.0, j3 / j if j != 0 else 0.0) for _ in range(n))
    return SpinLattice(
        sites=(0.5,) * n,
        edges=_ring_edges(n, j),
        field=(0.0, 0.0, b),
        anisotropy=aniso,
        convention="pauli",
        name=f"xxz_ring{n}",
    )


def ising_ring(n: int, sign: int = +1, b: float = 0.0) -> SpinLattice:
    """Transverse-field Ising ring +-sum sigma3 sigma3 + B sum sigma1."""
    return SpinLattice(
        sites=(0.5,) * n,
        edges=_ring_edges(n, float(sign)),
        field=(b, 0.0, 0.0),
        anisotropy=tuple((0.0, 0.0, 1.0) for _ in range(n)),
        convention="pauli",
        name=f"ising_ring{n}",
    )


def blbq_ring6(a: float) -> SpinLattice:
    """Ring of six spins-1 with cos(a) bilinear + sin(a) biquadratic
    couplings."""
    return SpinLattice(
        sites=(1.0,) * 6,
        edges=_ring_edges(6, np.cos(a), np.sin(a)),
        convention="spin",
        name="blbq_ring6",
    )


def cube_center(a: float) -> SpinLattice:
    """Eight spins-1/2 on cube vertices (coupling cos a along edges) plus a
    ninth in the center coupled to all of them with sin a."""
    cube_edges = [
        (0, 1), (1, 2), (2, 3), (3, 0),
        (4, 5), (5, 6), (6, 7), (7, 4),
        (0, 4), (1, 5), (2, 6), (3, 7),
    ]
    edges = [(i, j, np.cos(a), 0.0) for i, j in cube_edges]
    edges += [(i, 8, np.sin(a), 0.0) for i in range(8)]
    return SpinLattice(
        sites=(0.5,) * 9, edges=tuple(edges), convention="spin",
        name="cube_center",
    )


def octahedron_center(a: float) -> SpinLattice:
    """Six spins-1/2 on octahedron vertices (sites 0 and 5 polar, 1-4
    equatorial) with a central spin-1 coupled by sin a."""
    oct_edges = [(0, k) for k in (1, 2, 3, 4)] + [(5, k) for k in (1, 2, 3, 4)]
    oct_edges += [(1, 2), (2, 3), (3, 4), (1, 4)]
    edges = [(i, j, np.cos(a), 0.0) for i, j in oct_edges]
    edges += [(k, 6, np.sin(a), 0.0) for k in range(6)]
    return SpinLattice(
        sites=(0.5,) * 6 + (1.0,),
        edges=tuple(edges),
        convention="spin",
        name="octahedron_center",
    )


def tetrahedron_center(a: float) -> SpinLattice:
    """Four mutually coupled spins-1/2 (coupling cos a, the all-pairs form
    of the squared total spin) around a central spin-1 coupled by sin a."""
    edges = [(i, j, np.cos(a), 0.0) for i in range(4) for j in range(i + 1, 4)]
    edges += [(k, 4, np.sin(a), 0.0) for k in range(4)]
    return SpinLattice(
        sites=(0.5,) * 4 + (1.0,),
        edges=tuple(edges),
        convention="spin",
        name="tetrahedron_center",
    )


def dimer_chain(n: int, j1: float, j2: float) -> SpinLattice:
    """Alternating-coupling spin-1/2 chain: j1 inside dimers, j2 between."""
    if n % 2:
        raise DomainError("dimer chain needs an even number of sites")
    edges = []
    for i in range(n - 1):
        edges.append((i, i + 1, j1 if i % 2 == 0 else j2, 0.0))
    return SpinLattice(
        sites=(0.5,) * n, edges=tuple(edges), convention="spin",
        name=f"dimer_chain{n}",
    )


MODEL_FACTORIES = {
    "xxx_ring": xxx_ring,
    "xxx_chain": xxx_chain,
    "xxz_ring": xxz_ring,
    "ising_ring": ising_ring,
    "blbq_ring6": blbq_ring6,
    "cube_center": cube_center,
    "octahedron_center": octahedron_center,
    "tetrahedron_center": tetrahedron_center,
    "dimer_chain": dimer_chain,
}
