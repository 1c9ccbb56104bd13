"""Finite probability distributions and ragged joint distributions.

The two value types are immutable: every operation returns a new object and
is safe to call concurrently.  Validating constructors (`make_distribution`,
`make_joint`) accept anything within the input tolerances and renormalize
exactly by the sum; the structural constructors (`uniform`, `direct_product`,
`refinement_joint`) build their entries directly so that identities such as
``flatten(refinement_joint(counts)) == uniform(sum(counts))`` hold exactly,
bit for bit.

File formats
------------
JSON: ``{"p": [..]}`` for a distribution, ``{"rows": [[..], [..]]}`` for a
joint.  CSV: one distribution per line (comma-separated probabilities); a
joint file holds one joint, one row per line.  Readers apply the same
validation as `make_distribution` / `make_joint`.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from ._stable import escort_weights, exact_sum
from .errors import (
    DimensionError,
    EscortUndefined,
    FormatError,
    NegativeMass,
    NotNormalized,
    ZeroMarginal,
)

#: |sum - 1| must be below this before renormalization.
SUM_TOLERANCE = 1e-9
#: entries in [-NEGATIVE_TOLERANCE, 0) are clipped to 0; below is an error.
NEGATIVE_TOLERANCE = 1e-12


@dataclass(frozen=True)
class Distribution:
    """A point on the probability simplex: nonnegative entries summing to 1.

    Construct through `make_distribution` (validating) or `uniform`; the raw
    constructor trusts its input.
    """

    probs: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.probs)

    def __iter__(self):
        return iter(self.probs)


@dataclass(frozen=True)
class JointDistribution:
    """A ragged nonnegative array r_kl with grand total 1.

    Row k has its own length m_k; the marginal is the tuple of row sums and
    each positive-marginal row divided by its sum is a conditional
    distribution.
    """

    rows: tuple[tuple[float, ...], ...]

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)


def _clip(values: Iterable[float], what: str) -> list[float]:
    out = []
    for v in values:
        v = float(v)
        if not math.isfinite(v):
            raise NotNormalized(f"{what} entry {v!r} is not finite")
        if v < -NEGATIVE_TOLERANCE:
            raise NegativeMass(f"{what} entry {v!r} below -{NEGATIVE_TOLERANCE}")
        out.append(0.0 if v < 0.0 else v)
    return out


def make_distribution(values: Sequence[float]) -> Distribution:
    """Validate and exactly renormalize a probability vector.

    Entries may be off by decimal rounding: anything in [-1e-12, 0) is
    clipped to 0 and the sum must be within 1e-9 of 1.  The stored entries
    are the clipped inputs divided by their sum.

    Raises
    ------
    DimensionError
        If ``values`` is empty.
    NegativeMass
        If an entry is below -1e-12.
    NotNormalized
        If the sum is outside [1 - 1e-9, 1 + 1e-9].
    """
    vals = _clip(values, "probability")
    if not vals:
        raise DimensionError("a distribution needs at least one entry")
    total = exact_sum(vals)
    if abs(total - 1.0) > SUM_TOLERANCE:
        raise NotNormalized(f"probabilities sum to {total!r}, not 1")
    return Distribution(tuple(v / total for v in vals))


def make_joint(rows: Sequence[Sequence[float]]) -> JointDistribution:
    """Validate and exactly renormalize a ragged joint array.

    Same tolerances as `make_distribution`, applied to the grand total.
    """
    if not rows:
        raise DimensionError("a joint distribution needs at least one row")
    clipped = []
    for row in rows:
        crow = _clip(row, "joint")
        if not crow:
            raise DimensionError("joint rows must be non-empty")
        clipped.append(crow)
    total = exact_sum(itertools.chain.from_iterable(clipped))
    if abs(total - 1.0) > SUM_TOLERANCE:
        raise NotNormalized(f"joint entries sum to {total!r}, not 1")
    return JointDistribution(tuple(tuple(v / total for v in row) for row in clipped))


def uniform(n: int) -> Distribution:
    """The n-dimensional uniform distribution (every entry exactly 1/n)."""
    if n < 1:
        raise DimensionError(f"uniform dimension must be >= 1, got {n}")
    return Distribution((1.0 / n,) * n)


def direct_product(p: Distribution, q: Distribution) -> JointDistribution:
    """Joint distribution of independent components: r_kl = p_k * q_l."""
    return JointDistribution(
        tuple(tuple(pk * ql for ql in q.probs) for pk in p.probs)
    )


def marginal(joint: JointDistribution) -> Distribution:
    """Row-sum marginal p_k = sum_l r_kl, returned exactly normalized."""
    sums = [exact_sum(row) for row in joint.rows]
    total = exact_sum(sums)
    return Distribution(tuple(s / total for s in sums))


def conditional(joint: JointDistribution, k: int) -> Distribution:
    """Conditional distribution of row ``k`` (0-based): r_kl / p_k.

    Raises :class:`ZeroMarginal` if row ``k`` has zero mass.
    """
    row = joint.rows[k]
    pk = exact_sum(row)
    if pk <= 0.0:
        raise ZeroMarginal(f"row {k} has zero marginal")
    return Distribution(tuple(v / pk for v in row))


def escort(p: Distribution, alpha: float) -> Distribution:
    """The alpha-escort of ``p``: entry k proportional to p_k**alpha.

    Computed in log2 space with the largest term factored out, so the
    transform stays accurate for extreme exponents.  0**alpha := 0 for
    alpha > 0; for alpha <= 0 every entry must be strictly positive.
    """
    if not math.isfinite(alpha):
        raise EscortUndefined(f"escort exponent must be finite, got {alpha!r}")
    if alpha <= 0.0 and any(v == 0.0 for v in p.probs):
        raise EscortUndefined(
            f"escort exponent {alpha!r} needs strictly positive entries"
        )
    if alpha == 1.0:
        return p
    return Distribution(tuple(escort_weights(p.probs, alpha)))


def refinement_joint(counts: Sequence[int]) -> JointDistribution:
    """The even refinement joint: row i holds m_i cells of exactly 1/m.

    Here m = sum(counts).  The marginal is (m_1/m, ..., m_n/m) and every
    conditional row is uniform, which is the construction that pins the
    entropy of rational distributions to the uniform trace.
    """
    if not counts:
        raise DimensionError("refinement needs at least one block")
    if any(c < 1 for c in counts):
        raise DimensionError(f"refinement counts must be >= 1, got {tuple(counts)}")
    m = sum(int(c) for c in counts)
    cell = 1.0 / m
    return JointDistribution(tuple((cell,) * int(c) for c in counts))


def flatten(joint: JointDistribution) -> Distribution:
    """Concatenate all rows into one distribution of dimension sum m_k."""
    return Distribution(tuple(itertools.chain.from_iterable(joint.rows)))


# ---------------------------------------------------------------------------
# File input/output


def _parse_floats(text: str, where: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise FormatError(f"unparseable number in {where}: {exc}") from exc


def _number_list(obj, where: str) -> list[float]:
    if not isinstance(obj, list):
        raise FormatError(f"{where}: expected a list of numbers, got {type(obj).__name__}")
    out = []
    for v in obj:
        try:
            out.append(float(v))
        except (TypeError, ValueError) as exc:
            raise FormatError(f"{where}: non-numeric entry {v!r}") from exc
    return out


def read_distributions(path: str | Path) -> list[Distribution]:
    """Read one or more distributions from a JSON or CSV file."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON in {path}: {exc}") from exc
        if not isinstance(obj, dict) or "p" not in obj:
            raise FormatError(f'{path}: expected an object with a "p" key')
        return [make_distribution(_number_list(obj["p"], str(path)))]
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError(f"{path}: no distributions found")
    return [make_distribution(_parse_floats(ln, str(path))) for ln in lines]


def read_joint(path: str | Path) -> JointDistribution:
    """Read a joint distribution from a JSON or CSV file."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON in {path}: {exc}") from exc
        if not isinstance(obj, dict) or "rows" not in obj:
            raise FormatError(f'{path}: expected an object with a "rows" key')
        rows = obj["rows"]
        if not isinstance(rows, list):
            raise FormatError(f'{path}: "rows" must be a list of rows')
        return make_joint([_number_list(row, str(path)) for row in rows])
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError(f"{path}: no joint rows found")
    return make_joint([_parse_floats(ln, str(path)) for ln in lines])


def write_distribution(path: str | Path, dist: Distribution, fmt: str = "json") -> None:
    """Write a distribution in the documented JSON or CSV format."""
    if fmt == "json":
        Path(path).write_text(json.dumps({"p": list(dist.probs)}) + "\n")
    elif fmt == "csv":
        Path(path).write_text(",".join(repr(v) for v in dist.probs) + "\n")
    else:
        raise FormatError(f"unknown format {fmt!r} (expected 'json' or 'csv')")


def write_joint(path: str | Path, joint: JointDistribution, fmt: str = "json") -> None:
    """Write a joint distribution in the documented JSON or CSV format."""
    if fmt == "json":
        Path(path).write_text(
            json.dumps({"rows": [list(r) for r in joint.rows]}) + "\n"
        )
    elif fmt == "csv":
        lines = [",".join(repr(v) for v in row) for row in joint.rows]
        Path(path).write_text("\n".join(lines) + "\n")
    else:
        raise FormatError(f"unknown format {fmt!r} (expected 'json' or 'csv')")
