"""Certificates: table re-derivation, the 6.89 window, the tail, lemma checks.

A certificate is a list of pieces ``(c-subinterval, bound enclosure, kind)``.
The kind string names the evaluator and the predicate the bound must meet,
e.g. ``km_volume>6.89`` or ``t1.muffin>=5.303``, so a certificate can be
replayed from its JSON alone (:func:`replay`).
"""

from __future__ import annotations

import contextvars
import enum
import hashlib
import json
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from decimal import ROUND_FLOOR, Decimal
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from . import __version__
from .bounds import (
    HProfile,
    QuantityId,
    V_combined,
    boundary_area_outside_disks,
    c1_from_cosh_R,
    collar_volume,
    combine_h,
    cosh_A,
    cosh_E,
    cosh_F,
    cosh_L,
    cosh_M,
    cosh_R,
    cosh_Rpp,
    cosh_Rprime,
    d_coshR,
    d_coshR_dc,
    d_muffin,
    dQ,
    dV,
    e_monotone_on,
    ell1_threshold,
    genus2_floor,
    km_volume_lower,
    muffin_volume,
    Q,
)
from .hyptrig import (
    HexSides,
    arccosh_i,
    cosh_double,
    cosh_half,
    hexagon_rule,
    sinh_from_cosh,
)
from .interval import DomainError, Interval, get_config
from .packing import borbounds_constants, boroczky_min_angle, max_packing_radius
from .hyptrig import PI

DEFAULT_MAX_DEPTH = 40
MAX_PIECES = 200_000
TAIL_START = "1.439"
TAIL_SWEEP_END = "1000"
NBC_DEFAULT_LO = "1.001"


class Status(str, enum.Enum):
    CERTIFIED = "certified"
    FALSIFIED = "falsified"
    INCONCLUSIVE = "inconclusive"

    def __str__(self) -> str:
        return self.value


def combine_status(statuses: Iterable[Status]) -> Status:
    statuses = list(statuses)
    if Status.FALSIFIED in statuses:
        return Status.FALSIFIED
    if Status.INCONCLUSIVE in statuses:
        return Status.INCONCLUSIVE
    return Status.CERTIFIED


class LemmaId(str, enum.Enum):
    borbounds = "borbounds"
    monotoneE = "monotoneE"
    table1 = "table1"
    table2 = "table2"
    l2twicel1 = "l2twicel1"
    no111 = "no111"
    uniquel1_threshold = "uniquel1_threshold"
    noboundarycross = "noboundarycross"
    tail_monotone = "tail_monotone"
    theorem_6_89_window = "theorem_6_89_window"

    def __str__(self) -> str:
        return self.value


# ---------------------------------------------------------------------------
# predicates and pieces

_KIND_RE = re.compile(r"^([A-Za-z_][\w.]*)(>=|<=|>|<)(-?\d+(?:\.\d*)?(?:[eE][-+]?\d+)?)$")


def parse_kind(kind: str) -> tuple[str, str, Fraction]:
    m = _KIND_RE.match(kind)
    if not m:
        raise ValueError(f"malformed piece kind {kind!r}")
    return m.group(1), m.group(2), Fraction(Decimal(m.group(3)))


def check(bound: Interval | None, op: str, t: Fraction) -> bool | None:
    """True if the predicate holds on all of ``bound``, False if it fails on all of it."""
    if bound is None:
        return None
    lo, hi = Fraction(bound.lo), Fraction(bound.hi)
    if op == ">":
        return True if lo > t else (False if hi <= t else None)
    if op == ">=":
        return True if lo >= t else (False if hi < t else None)
    if op == "<":
        return True if hi < t else (False if lo >= t else None)
    if op == "<=":
        return True if hi <= t else (False if lo > t else None)
    raise ValueError(op)


@dataclass(frozen=True)
class Piece:
    lo: float
    hi: float
    bound: Interval | None
    kind: str

    @property
    def box(self) -> Interval:
        return Interval(self.lo, self.hi)

    def holds(self) -> bool | None:
        _, op, t = parse_kind(self.kind)
        return check(self.bound, op, t)

    def to_json(self) -> dict:
        return {
            "lo": repr(self.lo),
            "hi": repr(self.hi),
            "bound_lo": None if self.bound is None else repr(self.bound.lo),
            "bound_hi": None if self.bound is None else repr(self.bound.hi),
            "kind": self.kind,
        }

    @classmethod
    def from_json(cls, d: dict) -> Piece:
        bound = None
        if d.get("bound_lo") is not None:
            bound = Interval(float(d["bound_lo"]), float(d["bound_hi"]))
        return cls(float(d["lo"]), float(d["hi"]), bound, d["kind"])


@dataclass
class Certificate:
    claim_id: str
    pieces: list[Piece]
    status: Status
    depth_used: int
    config_digest: str

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "config_digest": self.config_digest,
            "status": self.status.value,
            "depth_used": self.depth_used,
            "pieces": [p.to_json() for p in self.pieces],
        }

    @classmethod
    def from_json(cls, d: dict) -> Certificate:
        return cls(
            claim_id=d["claim_id"],
            pieces=[Piece.from_json(p) for p in d["pieces"]],
            status=Status(d["status"]),
            depth_used=int(d["depth_used"]),
            config_digest=d["config_digest"],
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @property
    def min_bound(self) -> float | None:
        los = [p.bound.lo for p in self.pieces if p.bound is not None]
        return min(los) if los else None


@dataclass(frozen=True)
class Witness:
    name: str
    value: Interval | None
    claim: str
    holds: bool

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value": None if self.value is None else self.value.to_json(),
            "claim": self.claim,
            "holds": self.holds,
        }


@dataclass
class LemmaReport:
    lemma_id: LemmaId
    verdict: Status
    witnesses: list[Witness]
    certificate: Certificate | None = None

    def to_json(self) -> dict:
        out = {
            "lemma_id": self.lemma_id.value,
            "verdict": self.verdict.value,
            "witnesses": [w.to_json() for w in self.witnesses],
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        return out


def config_digest(claim_id: str, **params) -> str:
    cfg = get_config()
    payload = {
        "claim_id": claim_id,
        "clamp_tol": cfg.clamp_tol,
        "slack_steps": cfg.slack_steps,
        "version": __version__,
        **params,
    }
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()[:16]


def _pmap(fn: Callable, items: Sequence, threads: int = 1) -> list:
    """Order-preserving map, optionally on a thread pool (numeric config is propagated)."""
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    ctx = contextvars.copy_context()
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(lambda x: ctx.copy().run(fn, x), items))


# ---------------------------------------------------------------------------
# evaluators addressable from piece kinds


def _nbc_gap(cosh_d: Interval) -> Interval:
    """2 arccosh(cosh d / cosh(d/2)) - d."""
    return 2 * arccosh_i(cosh_d / cosh_half(cosh_d)) - arccosh_i(cosh_d)


def _drrp_dr(c: Interval) -> Interval:
    """d(R + R')/dR = 1 - sinh R / sinh R'."""
    r = cosh_R(c)
    return 1 - sinh_from_cosh(r) / sinh_from_cosh(cosh_Rprime(r))


EVALUATORS: dict[str, Callable[[Interval], Interval]] = {
    "km_volume": lambda c: km_volume_lower(c)[0],
    "noboundarycross": _nbc_gap,
    "V_combined": V_combined,
    "Q": Q,
    "dQ": dQ,
    "dV": dV,
    "d_coshR": d_coshR,
    "d_coshR_dc": d_coshR_dc,
    "cosh_R": cosh_R,
    "dRRp_dR": _drrp_dr,
}


def evaluate_kind(kind: str, box: Interval) -> Interval | None:
    name, _, _ = parse_kind(kind)
    if name.startswith("t1.") or name.startswith("t2."):
        row = _evaluate_row_cached(int(name[1]), box.lo, box.hi)
        return getattr(row, name[3:]) if name[3:] != "H" else row.H.h
    try:
        return EVALUATORS[name](box)
    except DomainError:
        return None


# ---------------------------------------------------------------------------
# adaptive bisection


def bisection_certificate(
    claim_id: str,
    kind: str,
    box: Interval,
    max_depth: int = DEFAULT_MAX_DEPTH,
    threads: int = 1,
    max_pieces: int = MAX_PIECES,
) -> Certificate:
    """Bisect ``box`` until the predicate of ``kind`` holds on every leaf.

    Falsified as soon as some piece fails the predicate on its whole bound
    enclosure; inconclusive when a piece is still undecided at ``max_depth``.
    Pieces are returned sorted by their left endpoint.
    """
    _, op, t = parse_kind(kind)
    leaves: list[Piece] = []
    pending = [box]
    depth = 0
    status = Status.CERTIFIED
    while pending:
        bounds = _pmap(lambda b: evaluate_kind(kind, b), pending, threads)
        level = [Piece(b.lo, b.hi, bd, kind) for b, bd in zip(pending, bounds)]
        verdicts = [check(p.bound, op, t) for p in level]
        if any(v is False for v in verdicts):
            status = Status.FALSIFIED
            leaves.extend(level)
            break
        undecided = [p for p, v in zip(level, verdicts) if v is None]
        leaves.extend(p for p, v in zip(level, verdicts) if v)
        if not undecided:
            break
        if depth >= max_depth or len(leaves) + 2 * len(undecided) > max_pieces:
            status = Status.INCONCLUSIVE
            leaves.extend(undecided)
            break
        pending = [half for p in undecided for half in p.box.bisect()]
        depth += 1
    leaves.sort(key=lambda p: (p.lo, p.hi))
    return Certificate(
        claim_id=claim_id,
        pieces=leaves,
        status=status,
        depth_used=depth,
        config_digest=config_digest(claim_id, kind=kind, max_depth=max_depth),
    )


def _covers(pieces: Sequence[Piece]) -> bool:
    return all(a.hi == b.lo for a, b in zip(pieces, pieces[1:]))


def replay(cert: Certificate | dict) -> Status:
    """Re-evaluate every piece from scratch and recompute the status."""
    if isinstance(cert, dict):
        cert = Certificate.from_json(cert)
    by_kind: dict[str, list[Piece]] = {}
    for p in cert.pieces:
        by_kind.setdefault(p.kind, []).append(p)
    if cert.claim_id.startswith("window") or cert.claim_id.startswith("noboundarycross"):
        for ps in by_kind.values():
            if not _covers(sorted(ps, key=lambda p: p.lo)):
                return Status.INCONCLUSIVE
    verdicts = []
    for p in cert.pieces:
        fresh = Piece(p.lo, p.hi, evaluate_kind(p.kind, p.box), p.kind)
        verdicts.append(fresh.holds())
    if cert.claim_id.startswith("table"):
        return Status.CERTIFIED if all(v is True for v in verdicts) else Status.FALSIFIED
    if any(v is False for v in verdicts):
        return Status.FALSIFIED
    if any(v is None for v in verdicts):
        return Status.INCONCLUSIVE
    return Status.CERTIFIED


# ---------------------------------------------------------------------------
# Tables


# (cosh l1 lo, hi, muffin, area, H, H label, volume) as printed
PRINTED_TABLES: dict[int, list[tuple[str, ...]]] = {
    1: [
        ("1.215", "1.220", "5.304", "2.216", ".629", "E", "6.899"),
        ("1.220", "1.226", "5.236", "2.399", ".611", "E", "6.899"),
        ("1.226", "1.233", "5.159", "2.609", ".592", "E", "6.900"),
        ("1.233", "1.241", "5.076", "2.844", ".574", "E", "6.901"),
        ("1.241", "1.250", "4.988", "3.097", ".556", "E", "6.901"),
        ("1.250", "1.260", "4.895", "3.367", ".539", "F", "6.898"),
        ("1.260", "1.270", "4.808", "3.648", ".524", "F", "6.908"),
        ("1.270", "1.281", "4.717", "3.911", ".510", "F", "6.898"),
        ("1.281", "1.292", "4.632", "4.182", ".498", "F", "6.900"),
        ("1.292", "1.303", "4.551", "4.436", ".488", "F", "6.898"),
        ("1.303", "1.314", "4.475", "4.675", ".479", "F", "6.894"),
        ("1.314", "1.324", "4.409", "4.899", ".471", "F", "6.899"),
        ("1.324", "1.334", "4.346", "5.092", ".464", "F", "6.891"),
        ("1.334", "1.343", "4.292", "5.275", ".459", "F", "6.893"),
        ("1.343", "1.351", "4.245", "5.432", ".454", "F", "6.894"),
        ("1.351", "1.358", "4.206", "5.565", ".451", "F", "6.895"),
        ("1.358", "1.364", "4.173", "5.678", ".448", "F", "6.896"),
        ("1.364", "1.367", "4.157", "5.772", ".447", "F", "6.917"),
    ],
    2: [
        ("1.367", "1.377", "4.105", "5.818", ".447", "M", "6.892"),
        ("1.377", "1.392", "4.031", "5.966", ".448", "M", "6.894"),
        ("1.392", "1.416", "3.920", "6.176", ".449", "M", "6.893"),
        ("1.416", "1.439", "3.823", "6.485", ".451", "M", "6.959"),
    ],
}

TABLE_TOL = Decimal("0.001")
THEOREM_TARGET = "6.89"
COLUMNS = ("muffin", "area", "H", "volume")


def floor3(x: float) -> Decimal:
    """Truncate (floor) to three decimals; the result stays a valid lower bound."""
    return Decimal(x).quantize(Decimal("0.001"), rounding=ROUND_FLOOR)


@dataclass(frozen=True)
class RowEval:
    muffin: Interval
    area: Interval
    H: HProfile
    volume: Interval
    methods: tuple[tuple[str, str], ...]


def evaluate_row(table_id: int, c: Interval) -> RowEval:
    """Bound the four columns over one subinterval of cosh l1.

    Plain natural interval extension, except where a monotonicity
    certificate allows evaluating at one endpoint: the muffin volume when
    its l1-derivative encloses only negative values, and E when
    :func:`~hypvol.bounds.e_monotone_on` holds.  Every other quantity has a
    single occurrence of c, so its natural extension is already tight.
    """
    right = Interval.point(c.hi)
    methods = []
    if d_muffin(c).hi < 0:
        muffin = muffin_volume(right)
        methods.append(("muffin", "decreasing: right endpoint"))
    else:
        muffin = muffin_volume(c)
        methods.append(("muffin", "natural"))
    area = boundary_area_outside_disks(c)
    if table_id == 1:
        if e_monotone_on(c):
            e = cosh_E(right)
            methods.append(("E", "decreasing: right endpoint"))
        else:
            e = cosh_E(c)
            methods.append(("E", "natural"))
        groups = {"EF": {QuantityId.E: e, QuantityId.F: cosh_F(c)}}
    elif table_id == 2:
        groups = {"LM": {QuantityId.L: cosh_L(c), QuantityId.M: cosh_M(c)}}
    else:
        raise ValueError(f"unknown table {table_id}")
    H = combine_h(c, cosh_A(c), groups)
    volume = muffin + collar_volume(area, H.h)
    return RowEval(muffin, area, H, volume, tuple(methods))


def _evaluate_row_cached(table_id: int, lo: float, hi: float) -> RowEval:
    return _row_cache(table_id, lo, hi, get_config())


@lru_cache(maxsize=256)
def _row_cache(table_id: int, lo: float, hi: float, _cfg) -> RowEval:
    return evaluate_row(table_id, Interval(lo, hi))


@dataclass
class TableRow:
    table_id: int
    c1_text: tuple[str, str]
    c1_range: Interval
    muffin: Interval
    area: Interval
    H: HProfile
    volume: Interval
    printed: dict[str, str]
    printed_label: str
    checks: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def muffin_lb(self) -> Decimal:
        return floor3(self.muffin.lo)

    @property
    def area_lb(self) -> Decimal:
        return floor3(self.area.lo)

    @property
    def H_lb(self) -> Decimal:
        return floor3(self.H.h.lo)

    @property
    def vol_lb(self) -> Decimal:
        return floor3(self.volume.lo)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failing(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]


def _column_kind(table_id: int, col: str, printed: str) -> str:
    return f"t{table_id}.{col}>={Decimal(printed) - TABLE_TOL}"


def verify_table(table_id: int, threads: int = 1) -> tuple[list[TableRow], Certificate]:
    """Recompute every printed row and check it against the printed values."""
    if table_id not in PRINTED_TABLES:
        raise ValueError(f"table id must be 1 or 2, got {table_id}")
    printed_rows = PRINTED_TABLES[table_id]
    boxes = [Interval.from_decimal(r[0], r[1]) for r in printed_rows]
    evals = _pmap(lambda b: _evaluate_row_cached(table_id, b.lo, b.hi), boxes, threads)
    rows, pieces = [], []
    for r, box, ev in zip(printed_rows, boxes, evals):
        printed = dict(zip(COLUMNS, (r[2], r[3], r[4], r[6])))
        row = TableRow(
            table_id=table_id,
            c1_text=(r[0], r[1]),
            c1_range=box,
            muffin=ev.muffin,
            area=ev.area,
            H=ev.H,
            volume=ev.volume,
            printed=printed,
            printed_label=r[5],
        )
        values = {"muffin": ev.muffin, "area": ev.area, "H": ev.H.h, "volume": ev.volume}
        for col in COLUMNS:
            kind = _column_kind(table_id, col, printed[col])
            piece = Piece(box.lo, box.hi, values[col], kind)
            pieces.append(piece)
            row.checks[col] = piece.holds() is True
        theorem = Piece(box.lo, box.hi, ev.volume, f"t{table_id}.volume>{THEOREM_TARGET}")
        pieces.append(theorem)
        row.checks["volume>6.89"] = theorem.holds() is True
        # re-assembly from the truncated columns must not exceed the raw volume bound
        reassembled = Interval.from_decimal(str(row.muffin_lb)) + collar_volume(
            Interval.from_decimal(str(row.area_lb)), Interval.from_decimal(str(row.H_lb))
        )
        row.checks["reassembly"] = reassembled.lo <= ev.volume.lo
        if row.printed_label not in row.H.label.split(","):
            row.notes.append(f"H realised by {row.H.label}, printed label {row.printed_label}")
        if row.H.h_unfloored is not None:
            row.notes.append(f"H without the l1/2 floor: {floor3(row.H.h_unfloored.lo)}")
        rows.append(row)
    status = Status.CERTIFIED if all(row.ok for row in rows) else Status.FALSIFIED
    claim = f"table{table_id}"
    cert = Certificate(claim, pieces, status, 0, config_digest(claim))
    return rows, cert


# ---------------------------------------------------------------------------
# the window and the tail


def _as_interval(x) -> Interval:
    return Interval.coerce(x if not isinstance(x, float) else repr(x))


def certify_window(
    target: float | str = THEOREM_TARGET,
    c1_lo: float | str = "1.215",
    c1_hi: float | str = "1.439",
    max_depth: int = DEFAULT_MAX_DEPTH,
    threads: int = 1,
) -> Certificate:
    """Certify km_volume_lower > target on [c1_lo, c1_hi] by plain bisection.

    Decimal inputs are enclosed outward, so the certified range contains the
    stated one.  Uses E/F everywhere and L/M on pieces below the L/M threshold.
    """
    lo, hi = _as_interval(c1_lo), _as_interval(c1_hi)
    if lo.lo < genus2_floor().lo:
        raise ValueError(f"window must start at or above (3+sqrt3)/4, got {c1_lo}")
    box = Interval(lo.lo, hi.hi)
    t = str(target) if not isinstance(target, str) else target
    claim = f"window:{t}:[{c1_lo},{c1_hi}]"
    return bisection_certificate(claim, f"km_volume>{t}", box, max_depth=max_depth, threads=threads)


def _point_piece(kind: str, x: str) -> Piece:
    box = Interval.from_decimal(x)
    return Piece(box.lo, box.hi, evaluate_kind(kind, box), kind)


def certify_tail(max_depth: int = DEFAULT_MAX_DEPTH, threads: int = 1) -> tuple[Certificate, list[Witness]]:
    """Certify that the muffin-plus-collar volume exceeds 6.89 for all cosh l1 >= 1.439.

    Conjuncts: (a) V(1.439) > 6.89; (b) Q(1.439) < 0; (c) dQ/dl1 < 0;
    (d) d(cosh R)/dl1 < 0; (e) cosh R(1.439) < 2 with cosh R decreasing.
    With (b)-(e), V' = pi[(1 + c)(2 - cosh R) + d(cosh R)/dl1 * Q] > 0 on the
    tail.  (c)-(e) and V' > 0 are also checked by interval sweeps on
    [1.439, 1000]; beyond the sweep they follow from the sign argument
    recorded in the witnesses.
    """
    sweep = Interval(Interval.from_decimal(TAIL_START).lo, Interval.from_decimal(TAIL_SWEEP_END).hi)
    pieces = [
        _point_piece("V_combined>6.89", TAIL_START),
        _point_piece("Q<0", TAIL_START),
        _point_piece("cosh_R<2", TAIL_START),
    ]
    depth = 0
    for kind in ("dQ<0", "d_coshR<0", "d_coshR_dc<0", "dV>0"):
        sub = bisection_certificate("tail_monotone", kind, sweep, max_depth=max_depth, threads=threads)
        pieces.extend(sub.pieces)
        depth = max(depth, sub.depth_used)
    status = combine_status(
        Status.CERTIFIED if v is True else Status.FALSIFIED if v is False else Status.INCONCLUSIVE
        for v in (p.holds() for p in pieces)
    )
    cert = Certificate("tail_monotone", pieces, status, depth, config_digest("tail_monotone", max_depth=max_depth))

    c = Interval.from_decimal(TAIL_START)
    V, q, r = V_combined(c), Q(c), cosh_R(c)
    sweep_ok = {k: all(p.holds() for p in pieces if p.kind == k) for k in ("dQ<0", "d_coshR<0", "d_coshR_dc<0", "dV>0")}
    witnesses = [
        Witness("V_combined(1.439)", V, "> 6.89 (and > 7.0)", V.lo > 7.0),
        Witness("Q(1.439)", q, "< 0", q.hi < 0),
        Witness("cosh_R(1.439)", r, "in (1.4, 1.5), < 2", 1.4 < r.lo and r.hi < 1.5),
        Witness("dQ sweep [1.439, 1000]", None, "< 0 on every piece", sweep_ok["dQ<0"]),
        Witness("d_coshR sweep [1.439, 1000]", None, "< 0 on every piece", sweep_ok["d_coshR<0"]),
        Witness("d(cosh R)/dc sweep [1.439, 1000]", None, "< 0 on every piece", sweep_ok["d_coshR_dc<0"]),
        Witness("V' sweep [1.439, 1000]", None, "> 0 on every piece", sweep_ok["dV>0"]),
        Witness(
            "dQ symbolic",
            None,
            "1/cosh R - 1 - cosh l1 < 0 for all c > 1 since cosh R > 1",
            True,
        ),
        Witness(
            "d_coshR symbolic",
            None,
            "-sinh l1/((2c-2)^2 cosh R) < 0 for all c > 1",
            True,
        ),
        Witness(
            "V' decomposition",
            None,
            "1 + 2c + cosh R(1/cosh R - 1 - c) = (1 + c)(2 - cosh R) > 0 and d(cosh R)/dl1 * Q > 0",
            r.hi < 2 and q.hi < 0,
        ),
    ]
    if not all(w.holds for w in witnesses):
        cert.status = Status.FALSIFIED
    return cert, witnesses


# ---------------------------------------------------------------------------
# lemma certifiers


def _in(x: Interval, lo: str, hi: str) -> bool:
    return Fraction(Decimal(lo)) <= Fraction(x.lo) and Fraction(x.hi) <= Fraction(Decimal(hi))


def _sqrt3() -> Interval:
    return Interval.point(3.0).sqrt()


def _lemma_borbounds() -> LemmaReport:
    d11_max, l1_min = borbounds_constants()
    s3 = _sqrt3()
    direct_d11 = 3 + 2 * s3
    direct_l1 = (3 + s3) / 4
    r2 = max_packing_radius(2).cosh_R_max
    direct_r = (1 + s3) / Interval.point(2.0).sqrt()
    ws = [
        Witness("alpha_min(2)", boroczky_min_angle(2), "encloses pi/6", boroczky_min_angle(2).overlaps(PI / 6)),
        Witness("cosh_R_max(2)", r2, "overlaps (1+sqrt3)/sqrt2", r2.overlaps(direct_r)),
        Witness("cosh_d11_max", d11_max, "in [6.4641, 6.4642], overlaps 3+2sqrt3", _in(d11_max, "6.4641", "6.4642") and d11_max.overlaps(direct_d11)),
        Witness("cosh_l1_min", l1_min, "in [1.18301, 1.18302], overlaps (3+sqrt3)/4", _in(l1_min, "1.18301", "1.18302") and l1_min.overlaps(direct_l1)),
        Witness("cosh_R(cosh_l1_min)", cosh_R(l1_min), "overlaps (1+sqrt3)/sqrt2", cosh_R(l1_min).overlaps(direct_r)),
    ]
    return _report(LemmaId.borbounds, ws)


def _lemma_monotone_e() -> LemmaReport:
    """E decreasing for (3+sqrt3)/4 <= cosh l1 <= 1.4.

    d(R + R')/dR = 1 - sinh R/sinh R' is <= 0 exactly when cosh R >= 3/2,
    which on a decreasing cosh R means c <= 7/5 (cosh R(7/5) = 3/2).
    """
    floor = genus2_floor()
    rng = Interval(floor.lo, Interval.from_fraction(Fraction(7, 5)).lo)
    at_75 = cosh_R(Interval.from_fraction(Fraction(7, 5)))
    at_76 = cosh_R(Interval.from_fraction(Fraction(7, 6) + Fraction(1, 10**9)))
    dcr = bisection_certificate("monotoneE", "d_coshR_dc<0", rng, max_depth=20)
    # strict sign sweep short of 1.4, where the derivative vanishes
    short = Interval(floor.lo, Interval.from_decimal("1.3999").lo)
    sweep = bisection_certificate("monotoneE", "dRRp_dR<0", short, max_depth=20)
    ws = [
        Witness("cosh_R(7/5)", at_75, "encloses 3/2", at_75.contains(1.5)),
        Witness("range upper end", Interval.point(rng.hi), "<= 7/5 exactly", Fraction(rng.hi) <= Fraction(7, 5)),
        Witness("cosh_R(floor)", cosh_R(floor), "< 2, so R' is defined on the range", cosh_R(floor).hi < 2),
        Witness("cosh_R(7/6 + 1e-9)", at_76, "just below 2 (R' degenerates at c = 7/6 < floor)", at_76.hi < 2),
        Witness("d(cosh R)/dc on range", None, f"< 0 on {len(dcr.pieces)} pieces", dcr.status is Status.CERTIFIED),
        Witness("d(R+R')/dR on [floor, 1.3999]", None, f"< 0 on {len(sweep.pieces)} pieces", sweep.status is Status.CERTIFIED),
        Witness("e_monotone_on(range)", None, "certified decreasing", e_monotone_on(rng)),
    ]
    return _report(LemmaId.monotoneE, ws, sweep)


def _lemma_table(table_id: int) -> LemmaReport:
    rows, cert = verify_table(table_id)
    ws = []
    for row in rows:
        lo, hi = row.c1_text
        ws.append(Witness(f"[{lo},{hi}] volume", row.volume, f">= {row.printed['volume']} - 0.001 and > 6.89", row.ok))
    return LemmaReport(LemmaId(f"table{table_id}"), cert.status, ws, cert)


def _lemma_l2twicel1() -> LemmaReport:
    top = Interval.from_decimal("1.215")
    rng = Interval(genus2_floor().lo, top.hi)
    e = cosh_E(Interval.point(rng.hi)) if e_monotone_on(rng) else cosh_E(rng)
    f = cosh_F(rng)
    ell2 = arccosh_i(e.min(f))
    ell1 = arccosh_i(top)
    a = arccosh_i(cosh_A(top))
    ws = [
        Witness("cosh E lower bound on [floor, 1.215]", e, "lower bound in [1.960, 1.962] (printed 1.961)", _in(Interval.point(e.lo), "1.960", "1.962")),
        Witness("cosh F lower bound on [floor, 1.215]", f, "lower bound in [1.959, 1.961] (printed 1.960)", _in(Interval.point(f.lo), "1.959", "1.961")),
        Witness("l2 lower bound", ell2, "lower bound in [1.292, 1.294] (printed 1.293)", _in(Interval.point(ell2.lo), "1.292", "1.294")),
        Witness("l1 at cosh l1 = 1.215", ell1, "<= .645", ell1.hi <= 0.645),
        Witness("A at cosh l1 = 1.215", a, "in [.643, .645] (printed .644)", _in(a, "0.643", "0.645")),
        Witness("2 l1 < l2", 2 * ell1, "< l2 lower bound", (2 * ell1).hi < ell2.lo),
        Witness("2 A < l2", 2 * a, "< l2 lower bound", (2 * a).hi < ell2.lo),
    ]
    return _report(LemmaId.l2twicel1, ws)


def _lemma_no111() -> LemmaReport:
    d11_max, _ = borbounds_constants()
    s3 = _sqrt3()
    threshold = (1 + 1 / s3).sqrt()
    identity_ok = True
    for x in ("1.19", "1.2", "1.215", "1.3"):
        c = Interval.from_decimal(x)
        via_rule = hexagon_rule(HexSides(c, c, cosh_double(c)))
        closed = 3 + 2 / (c.sqr() - 1)
        identity_ok &= via_rule.overlaps(closed)
    rng = Interval(genus2_floor().lo, Interval.from_decimal("1.215").hi)
    forced = 3 + 2 / (rng.sqr() - 1)
    ws = [
        Witness("hexagon rule with l'' = 2 l1", None, "equals 3 + 2/sinh^2 l1 at sample points", identity_ok),
        Witness("sqrt(1 + 1/sqrt3)", threshold, "> 1.255", threshold.lo > 1.255),
        Witness("sqrt(1 + 1/sqrt3) vs 1.215", threshold, "> 1.215 (contradiction)", threshold.lo > Interval.from_decimal("1.215").hi),
        Witness("3 + 2/sinh^2 l1 on [floor, 1.215]", forced, "> max cosh d11 = 3 + 2sqrt3", forced.lo > d11_max.hi),
    ]
    return _report(LemmaId.no111, ws)


def _lemma_uniquel1() -> LemmaReport:
    solved = c1_from_cosh_R(cosh_Rpp())
    closed = ell1_threshold()
    ws = [
        Witness("c1 solving cosh R = cosh R''", solved, "in [1.4396, 1.4397]", _in(solved, "1.4396", "1.4397")),
        Witness("cos(2pi/9)/(2cos(2pi/9) - 1)", closed, "overlaps the solved value", closed.overlaps(solved)),
        Witness("cosh_R(solution)", cosh_R(solved), "overlaps cosh R''", cosh_R(solved).overlaps(cosh_Rpp())),
        Witness("cosh R''", cosh_Rpp(), "in [1.4619, 1.4620]", _in(cosh_Rpp(), "1.4619", "1.4620")),
    ]
    return _report(LemmaId.uniquel1_threshold, ws)


def certify_noboundarycross(
    lo: str = NBC_DEFAULT_LO, hi: Interval | str | None = None, max_depth: int = DEFAULT_MAX_DEPTH, threads: int = 1
) -> Certificate:
    """2 arccosh(cosh d / cosh(d/2)) - d > 0 for cosh d in [lo, hi] (default hi = 3 + 2sqrt3)."""
    top = borbounds_constants()[0] if hi is None else Interval.coerce(hi)
    box = Interval(Interval.from_decimal(lo).lo, top.hi)
    return bisection_certificate(f"noboundarycross:[{lo},{box.hi!r}]", "noboundarycross>0", box, max_depth, threads)


def _lemma_noboundarycross(max_depth: int = DEFAULT_MAX_DEPTH) -> LemmaReport:
    cert = certify_noboundarycross(max_depth=max_depth)
    at_top = _nbc_gap(borbounds_constants()[0])
    ws = [
        Witness("2l - d at cosh d = 3 + 2sqrt3", at_top, "> 0", at_top.lo > 0),
        Witness("sweep over (1.001, 3 + 2sqrt3]", None, f"> 0 on {len(cert.pieces)} pieces", cert.status is Status.CERTIFIED),
    ]
    return LemmaReport(LemmaId.noboundarycross, combine_status([cert.status, _verdict(ws)]), ws, cert)


def _lemma_tail(max_depth: int = DEFAULT_MAX_DEPTH) -> LemmaReport:
    cert, ws = certify_tail(max_depth)
    return LemmaReport(LemmaId.tail_monotone, cert.status, ws, cert)


def _lemma_window(max_depth: int = DEFAULT_MAX_DEPTH) -> LemmaReport:
    cert = certify_window(THEOREM_TARGET, "1.215", "1.439", max_depth)
    mb = cert.min_bound
    ws = [
        Witness("min km_volume_lower over [1.215, 1.439]", None if mb is None else Interval.point(mb), "> 6.89", cert.status is Status.CERTIFIED),
        Witness("leaf pieces", None, f"{len(cert.pieces)} <= 10^4", len(cert.pieces) <= 10**4),
    ]
    return LemmaReport(LemmaId.theorem_6_89_window, combine_status([cert.status, _verdict(ws)]), ws, cert)


def _verdict(ws: list[Witness]) -> Status:
    return Status.CERTIFIED if all(w.holds for w in ws) else Status.FALSIFIED


def _report(lemma: LemmaId, ws: list[Witness], cert: Certificate | None = None) -> LemmaReport:
    return LemmaReport(lemma, _verdict(ws), ws, cert)


def certify_lemma(lemma_id: LemmaId | str, max_depth: int = DEFAULT_MAX_DEPTH) -> LemmaReport:
    lemma = LemmaId(lemma_id)
    if lemma is LemmaId.borbounds:
        return _lemma_borbounds()
    if lemma is LemmaId.monotoneE:
        return _lemma_monotone_e()
    if lemma is LemmaId.table1:
        return _lemma_table(1)
    if lemma is LemmaId.table2:
        return _lemma_table(2)
    if lemma is LemmaId.l2twicel1:
        return _lemma_l2twicel1()
    if lemma is LemmaId.no111:
        return _lemma_no111()
    if lemma is LemmaId.uniquel1_threshold:
        return _lemma_uniquel1()
    if lemma is LemmaId.noboundarycross:
        return _lemma_noboundarycross(max_depth)
    if lemma is LemmaId.tail_monotone:
        return _lemma_tail(max_depth)
    return _lemma_window(max_depth)
