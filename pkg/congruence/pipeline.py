# congruence/pipeline.py

from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from math import gcd

import numpy as np
from pydantic import BaseModel, model_validator
from tqdm import tqdm

from classpoly import hilbert
from config import GAMMA0_6_INDEX, MAX_WORKERS, STURM_MARGIN
from logs import get_logger
from modular.named_series import MOD4, NamedSeriesId, delta_power_mod4, gen
from partitions import default_engine
from quadforms import character_values, chi12, class_numbers, eligible, require_eligible
from series import Mod4LaurentSeries, substitute_poly
from utils import k_of
from utils.errors import InputError

log = get_logger(__name__)


class DiscriminantSet(BaseModel):
    """A sorted set S of eligible discriminants with h_S = max h(-D) and its Sturm bound."""

    members: list[int]
    hS: int
    sturm: int

    @model_validator(mode='after')
    def _consistent(self):
        if not self.members:
            raise ValueError("a discriminant set needs at least one member")
        if self.members != sorted(set(self.members)):
            raise ValueError("members must be strictly increasing")
        bad = [D for D in self.members if not eligible(D)]
        if bad:
            raise ValueError(f"ineligible discriminants: {bad[:5]}")
        if self.hS != int(class_numbers(self.members).max()):
            raise ValueError(f"hS = {self.hS} is not the maximal class number of the set")
        if self.sturm != sturm_bound(self.hS):
            raise ValueError(f"sturm = {self.sturm} differs from 12 hS + 2")
        return self

    @classmethod
    def of(cls, members):
        members = sorted(set(int(D) for D in members))
        for D in members:
            require_eligible(D)
        hS = int(class_numbers(members).max()) if members else 0
        return cls(members=members, hS=hS, sturm=sturm_bound(hS))

    @property
    def size(self):
        return len(self.members)

    @property
    def max_D(self):
        return self.members[-1]

    @property
    def ks(self):
        return [k_of(D) for D in self.members]

    def default_prec(self, margin=STURM_MARGIN):
        return self.sturm + margin

    def index(self, D):
        return self.members.index(D)


def gamma0_index():
    """[SL2(Z) : Gamma0(6)]."""
    return GAMMA0_6_INDEX


def sturm_bound(hS):
    """Index through which agreement forces congruence in weight 12 hS + 2 on Gamma0(6)."""
    if hS < 0:
        raise ValueError("hS must be nonnegative")
    return gamma0_index() * (12 * hS + 2) // 12


def _twist_multipliers(prec):
    return [m for m in range(1, prec + 1) if gcd(m, 12) == 1]


def needed_arguments(Ds, prec):
    """The partition arguments (D m^2 + 1) / 24, m <= prec, gcd(m, 12) = 1, for every D."""
    ms = np.array(_twist_multipliers(prec), dtype=np.int64)
    args = set()
    for D in Ds:
        args.update(((int(D) * ms * ms + 1) // 24).tolist())
    return args


def twisted_p(D, prec, engine=None, values=None):
    """
    P(D; q) = sum_{m,n>=1} chi_{-D}(n) chi_12(m) p((D m^2 + 1)/24) q^(nm) mod 4.

    Args:
        D (int): Eligible discriminant.
        prec (int): Last exponent included.
        engine (PartitionEngine): Source of p(n) mod 4.
        values (dict): Pre-fetched residues keyed by argument; missing ones go to the engine.

    Returns:
        Mod4LaurentSeries: Known to O(q^(prec+1)), constant term 0.
    """
    require_eligible(D)
    ms = _twist_multipliers(prec)
    args = [(D * m * m + 1) // 24 for m in ms]
    if values is None or any(a not in values for a in args):
        fetched = (engine or default_engine()).residues(args)
        values = fetched if values is None else {**values, **fetched}
    chi = character_values(-D, prec + 1).astype(np.int64)
    coeffs = np.zeros(prec + 1, dtype=np.int64)
    for m, a in zip(ms, args):
        v = (chi12(m) * values[a]) % 4
        if v:
            coeffs[m::m] += v * chi[1:prec // m + 1]
    return Mod4LaurentSeries(coeffs & 3, 0, prec + 1)


@lru_cache(maxsize=4096)
def class_polynomial_mod4(D):
    """H_{-D} reduced mod 4, leading coefficient first."""
    return tuple(hilbert(D).mod4())


def hol_norm(D, dset, prec, engine=None, values=None, H=None):
    """
    The holomorphic normalisation P(D;q) Delta^hS H_{-D}(1/Delta) mod 4, through q^prec.

    Parameters:
    - D: a member of ``dset``.
    - dset: DiscriminantSet supplying hS.
    - prec: last exponent included.
    - engine, values: partition sources, as in ``twisted_p``.
    - H: H_{-D} mod 4 (leading first); computed and cached when omitted.

    Returns:
    - Mod4LaurentSeries known to O(q^(prec+1)).
    """
    if D not in dset.members:
        raise InputError(f"{D} is not a member of the discriminant set")
    T = prec + 1
    H = class_polynomial_mod4(D) if H is None else H
    h = len(H) - 1
    twisted = twisted_p(D, prec, engine, values)
    delta_power = delta_power_mod4(dset.hS, T + h)
    # Delta^-1 to O(q^T) leaves H(1/Delta) known to O(q^(T - h + 1))
    inverse_part = substitute_poly(H, gen(NamedSeriesId.DeltaInvMod4, T, MOD4))
    return (twisted * delta_power * inverse_part).truncate(T)


def coefficient_column(series, prec):
    """Coefficients of q^1 .. q^prec as a uint8 vector."""
    series.coefficient(prec)  # PrecisionError when q^prec is unknown
    out = np.zeros(prec, dtype=np.uint8)
    lo = max(series.valuation, 1)
    if lo <= prec:
        coeffs = series.coefficients()
        out[lo - 1:prec] = coeffs[lo - series.valuation:prec + 1 - series.valuation]
    return out


def assemble(dset, prec=None, engine=None, progress=False):
    """
    Matrix over Z/4 with rows q^1 .. q^prec and one column per member of ``dset``.

    Class polynomials are computed first in this thread, since mpmath precision
    is process-global; the series products then run in a thread pool.

    Args:
        dset (DiscriminantSet): Columns.
        prec (int): Last row index; defaults to sturm + STURM_MARGIN.
        engine (PartitionEngine): Partition source.
        progress (bool): Show tqdm bars.

    Returns:
        numpy.ndarray: uint8 array of shape (prec, |S|).
    """
    prec = dset.default_prec() if prec is None else prec
    if prec < dset.sturm:
        log.warning("assembling through q^%d, below the Sturm bound %d", prec, dset.sturm)
    engine = engine or default_engine()
    log.info("assembling %d columns through q^%d", dset.size, prec)
    values = engine.residues(needed_arguments(dset.members, prec), progress=progress)
    polys = {D: class_polynomial_mod4(D) for D in tqdm(dset.members, desc='H_-D', disable=not progress)}

    def column(D):
        return coefficient_column(hol_norm(D, dset, prec, engine, values, polys[D]), prec)

    matrix = np.zeros((prec, dset.size), dtype=np.uint8)
    with ThreadPoolExecutor(max_workers=max(MAX_WORKERS, 1)) as pool:
        columns = pool.map(column, dset.members)
        for j, col in enumerate(tqdm(columns, total=dset.size, desc='columns', disable=not progress)):
            matrix[:, j] = col
    return matrix
