"""Bell functionals: scenario descriptors, coefficient tensors and the
catalog of named inequalities (CHSH, Mermin, Ardehali, MABK, Wu-Zong and
the three-setting family)."""

import json
from dataclasses import dataclass, field

import numpy as np

from bellforge.errors import DimensionError, DomainError


@dataclass(frozen=True)
class Scenario:
    """Number of parties and per-party setting counts (binary outcomes)."""

    n_parties: int
    settings: tuple[int, ...]

    def __post_init__(self):
        s = tuple(int(m) for m in self.settings)
        object.__setattr__(self, "settings", s)
        if len(s) != self.n_parties or any(m < 1 for m in s):
            raise DimensionError(f"bad settings {s} for {self.n_parties} parties")

    @property
    def n_strategies(self) -> int:
        return int(np.prod([2**m for m in self.settings]))


@dataclass
class BellFunctional:
    """Correlation-only Bell expression sum_j coeffs[j] E_j.

    ``coeffs`` has one axis per party indexed by that party's settings; the
    classical bound ``lhv_bound`` is filled by ``bell.lhv_bound``.
    """

    scenario: Scenario
    coeffs: np.ndarray
    lhv_bound: float | None = None
    name: str | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=float)
        if c.shape != self.scenario.settings:
            raise DimensionError(
                f"coeffs shape {c.shape} != settings {self.scenario.settings}"
            )
        if not np.isfinite(c).all():
            raise DomainError("coefficients must be finite")
        self.coeffs = c

    def to_record(self) -> dict:
        return {
            "name": self.name,
            "n_parties": self.scenario.n_parties,
            "settings": list(self.scenario.settings),
            "coeffs": self.coeffs.ravel().tolist(),
            "lhv_bound": self.lhv_bound,
        }

    @classmethod
    def from_record(cls, rec: dict) -> "BellFunctional":
        sc = Scenario(int(rec["n_parties"]), tuple(rec["settings"]))
        c = np.array(rec["coeffs"], dtype=float).reshape(sc.settings)
        return cls(sc, c, rec.get("lhv_bound"), rec.get("name"))


def catalog_to_json(functionals, path=None) -> str:
    payload = {"schema": 1, "functionals": [f.to_record() for f in functionals]}
    text = json.dumps(payload, indent=2, sort_keys=True)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


def catalog_from_json(text: str):
    payload = json.loads(text)
    return [BellFunctional.from_record(r) for r in payload["functionals"]]


def chsh() -> BellFunctional:
    c = np.array([[1.0, 1.0], [1.0, -1.0]])
    return BellFunctional(Scenario(2, (2, 2)), c, 2.0, "chsh")


def mermin(n: int) -> BellFunctional:
    """Real part of prod_k (A1 + i A2): terms with an even number of second
    settings, signs alternating with that count over 4."""
    if not 2 <= n <= 8:
        raise DomainError(f"mermin defined here for 2..8 parties, got {n}")
    c = np.zeros((2,) * n)
    for j in np.ndindex(*c.shape):
        m = sum(j)
        if m % 2 == 0:
            c[j] = (-1) ** (m // 2)
    bound = 2.0 ** (n // 2)
    return BellFunctional(Scenario(n, (2,) * n), c, bound, f"mermin{n}")


def ardehali(n: int) -> BellFunctional:
    """Mermin-type core on the first n-1 parties, with the last party
    measuring along two arbitrary axes coupled to the real and imaginary
    parts (sum and difference of its two observables).

    For odd n the raw sum reaches 2^((n+1)/2) classically, so it is scaled
    by 1/2 to carry the conventional bound 2^((n-1)/2); the violation ratio
    is unaffected.
    """
    if not 2 <= n <= 8:
        raise DomainError(f"ardehali defined here for 2..8 parties, got {n}")
    c = np.zeros((2,) * n)
    for j in np.ndindex(*((2,) * (n - 1))):
        m = sum(j)
        re = float((-1) ** (m // 2)) if m % 2 == 0 else 0.0
        im = float((-1) ** ((m - 1) // 2)) if m % 2 == 1 else 0.0
        c[j + (0,)] = re + im
        c[j + (1,)] = re - im
    if n % 2 == 1:
        c = c / 2.0
    bound = 2.0 ** (n // 2)
    return BellFunctional(Scenario(n, (2,) * n), c, bound, f"ardehali{n}")


def mabk(n: int) -> BellFunctional:
    """Belinskii-Klyshko recursion S1' = (S1 (A1+A2) + S2 (A1-A2))/2 with the
    companion expression S2 obtained by swapping settings everywhere."""
    if not 2 <= n <= 8:
        raise DomainError(f"mabk defined here for 2..8 parties, got {n}")
    s1 = np.array([1.0, 0.0])
    s2 = np.array([0.0, 1.0])
    for _ in range(n - 1):
        plus = np.array([0.5, 0.5])
        minus = np.array([0.5, -0.5])
        s1_new = np.multiply.outer(s1, plus) + np.multiply.outer(s2, minus)
        s1 = s1_new
        s2 = np.flip(s1_new, axis=tuple(range(s1_new.ndim)))
    return BellFunctional(Scenario(n, (2,) * n), s1, 1.0, f"mabk{n}")


def wu_zong_3q() -> BellFunctional:
    """Three-qubit inequality with four settings for two observers and two
    for the third: two CHSH blocks on disjoint setting pairs, coupled by the
    sum and difference of the third observer's settings.

    The classical bound 4 is the exact strategy-enumeration value of this
    expression (printed constants for it vary with normalization).
    """
    chsh2 = np.array([[1.0, 1.0], [1.0, -1.0]])
    c = np.zeros((4, 4, 2))
    c[:2, :2, 0] = chsh2
    c[:2, :2, 1] = chsh2
    c[2:, 2:, 0] = chsh2
    c[2:, 2:, 1] = -chsh2
    return BellFunctional(Scenario(3, (4, 4, 2)), c, 4.0, "wu_zong_3q")


# Three-setting, three-qubit tight inequalities in quarter-integer
# normalization (classical bound 1).  Keys are the per-party setting-count
# signatures; entries map (i, j, k) -> 4 * coefficient.
_THREE_SETTING_SCALED = {
    "three_settings_223": {
        (0, 0, 0): 2, (0, 0, 1): 1, (0, 0, 2): 1, (0, 1, 1): 1, (0, 1, 2): -1,
        (1, 0, 0): 2, (1, 0, 1): -1, (1, 0, 2): -1, (1, 1, 1): -1, (1, 1, 2): 1,
    },
    "three_settings_233a": {
        (0, 0, 0): 2, (0, 1, 1): 1, (0, 1, 2): 1, (0, 2, 1): 1, (0, 2, 2): -1,
        (1, 0, 0): 2, (1, 1, 1): -1, (1, 1, 2): -1, (1, 2, 1): -1, (1, 2, 2): 1,
    },
    "three_settings_233b": {
        (0, 0, 0): 2, (0, 0, 1): 1, (0, 0, 2): 1, (0, 1, 0): 1, (0, 1, 1): -1,
        (0, 2, 0): 1, (0, 2, 2): -1,
        (1, 0, 1): 1, (1, 0, 2): -1, (1, 1, 0): 1, (1, 1, 1): -1,
        (1, 2, 0): -1, (1, 2, 2): 1,
    },
    "three_settings_333": {
        (0, 0, 0): 1, (0, 0, 1): 1, (0, 1, 0): 1, (0, 1, 2): 1,
        (0, 2, 1): 1, (0, 2, 2): -1,
        (1, 0, 0): 1, (1, 0, 2): -1, (1, 1, 0): 1, (1, 1, 1): -1,
        (1, 2, 1): -1, (1, 2, 2): 1,
        (2, 0, 1): 1, (2, 0, 2): 1, (2, 1, 1): -1, (2, 1, 2): -1,
    },
}


def three_setting(name: str) -> BellFunctional:
    try:
        table = _THREE_SETTING_SCALED[name]
    except KeyError:
        raise DomainError(f"unknown three-setting inequality {name!r}") from None
    c = np.zeros((3, 3, 3))
    for idx, v in table.items():
        c[idx] = v / 4.0
    return BellFunctional(Scenario(3, (3, 3, 3)), c, 1.0, name)


def named_functionals() -> dict[str, BellFunctional]:
    """Catalog of all named inequalities supported out of the box."""
    cat = {"chsh": chsh(), "wu_zong_3q": wu_zong_3q()}
    for n in range(2, 7):
        for builder in (mermin, ardehali, mabk):
            f = builder(n)
            cat[f.name] = f
    for name in _THREE_SETTING_SCALED:
        cat[name] = three_setting(name)
    return cat
