"""Parameter sweeps: one record per tuple, persisted as JSON or CSV."""

import csv
import io
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from .basis import build_family
from .errors import InvalidParameters
from .hilbert import hilbert_report
from .local_algebra import is_standard_basis, is_toric
from .semigroup import PseudoSymParams, check_conditions, derive_generators

SCHEMA = 1

# Flags reported per valid tuple.  The sweep exits nonzero when any is false.
FLAG_NAMES = (
    "toric",
    "basis_size_formula",
    "closed_form_P",
    "closed_form_P1",
    "closed_form_P2",
    "closed_form_Q",
    "closed_form_Q_simplified",
    "identities",
    "Q1_is_n1",
    "oracle",
)

CSV_COLUMNS = (
    "a1", "a2", "a3", "a4", "a21", "valid", "failing", "coprime",
    "n1", "n2", "n3", "n4", "s", "basis_size", "std_basis_verified", "cm",
    "nondecreasing", "q_degree", "multiplicity",
) + FLAG_NAMES + ("failed_checks", "error")


@dataclass
class SweepConfig:
    a1: tuple = (2, 7)
    a2: tuple = (2, 7)
    a3: tuple = (2, 7)
    a4: tuple = (2, 7)
    a21: tuple = (1, 5)
    oracle_depth: int = 0
    jobs: int = 1
    output_path: str = None
    format: str = "json"

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a21"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"empty range for {name}: {lo}..{hi}")
        if self.oracle_depth < 0:
            raise ValueError("oracle depth must be >= 0")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.format not in ("json", "csv"):
            raise ValueError(f"unknown format {self.format!r}")

    def tuples(self):
        ranges = [range(lo, hi + 1) for lo, hi in
                  (self.a1, self.a2, self.a3, self.a4, self.a21)]
        return list(itertools.product(*ranges))


@dataclass
class SweepRecord:
    params: tuple
    valid: bool
    failing: list = field(default_factory=list)
    coprime: bool = None
    generators: tuple = None
    s: tuple = None
    basis_size: int = None
    std_basis_verified: bool = None
    cm: bool = None
    nondecreasing: bool = None
    q_degree: int = None
    multiplicity: int = None
    flags: dict = field(default_factory=dict)
    failed_checks: list = field(default_factory=list)
    error: str = None

    @property
    def consistent(self):
        return self.error is None and all(self.flags.values()) and (
            self.std_basis_verified is not False)

    def to_dict(self):
        d = asdict(self)
        d["params"] = list(self.params)
        d["generators"] = None if self.generators is None else list(self.generators)
        d["s"] = None if self.s is None else list(self.s)
        return d

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        d["params"] = tuple(d["params"])
        for key in ("generators", "s"):
            if d[key] is not None:
                d[key] = tuple(d[key])
        return cls(**d)


def hypotheses_hold(report):
    """Conditions (1)-(4) and n1 < n2 < n3 < n4.  Coprimality is data."""
    return all((report.cond1, report.cond2, report.cond3, report.cond4,
                report.ordered))


def evaluate_tuple(params, oracle_depth=0):
    """Full pipeline on one tuple; never raises for mathematical failures."""
    try:
        p = PseudoSymParams(*params)
    except InvalidParameters as exc:
        return SweepRecord(params=tuple(params), valid=False, failing=["range"],
                           error=str(exc))
    cond = check_conditions(p)
    gens = derive_generators(p)
    rec = SweepRecord(params=tuple(params), valid=hypotheses_hold(cond),
                      failing=cond.failing(), coprime=cond.coprime,
                      generators=tuple(gens))
    if not rec.valid:
        return rec
    try:
        fam = build_family(p)
        members = fam.binomials()
        rec.s = tuple(fam.s)
        rec.basis_size = len(fam)
        rec.std_basis_verified = is_standard_basis(members)[0]
        report = hilbert_report(p, oracle_depth=oracle_depth, strict=False)
    except Exception as exc:  # recorded, the sweep goes on
        rec.error = f"{type(exc).__name__}: {exc}"
        return rec
    a4 = p.alpha4
    checks = report.checks
    identity_keys = [k for k in checks if not k.startswith("closed_form")
                     and k not in ("Q(1)=n1", "tangent_cone_not_cm")]
    rec.cm = not checks["tangent_cone_not_cm"]
    rec.nondecreasing = report.nondecreasing
    rec.q_degree = report.Q.degree
    rec.multiplicity = report.multiplicity
    rec.flags = {
        "toric": all(is_toric(f, tuple(gens)) for f in members),
        "basis_size_formula": rec.basis_size == 2 * a4 + 3 + fam.s[a4 - 1],
        "closed_form_P": checks["closed_form_P"],
        "closed_form_P1": checks["closed_form_P1"],
        "closed_form_P2": checks["closed_form_P2"],
        "closed_form_Q": checks["closed_form_Q"],
        "closed_form_Q_simplified": checks["closed_form_Q_simplified"],
        "identities": all(checks[k] for k in identity_keys),
        "Q1_is_n1": checks["Q(1)=n1"],
        "oracle": report.oracle_agrees,
    }
    rec.failed_checks = sorted(k for k, v in checks.items() if not v)
    return rec


def _evaluate(args):
    return evaluate_tuple(*args)


def run_sweep(config):
    """Records in tuple order, whatever the worker count."""
    work = [(t, config.oracle_depth) for t in config.tuples()]
    if config.jobs == 1:
        return [_evaluate(w) for w in work]
    with ProcessPoolExecutor(max_workers=config.jobs) as pool:
        return list(pool.map(_evaluate, work, chunksize=8))


def summarize(records):
    valid = [r for r in records if r.valid]
    return {
        "tuples": len(records),
        "valid": len(valid),
        "noncoprime": sum(1 for r in valid if r.coprime is False),
        "verified_bases": sum(1 for r in valid if r.std_basis_verified),
        "nondecreasing": sum(1 for r in valid if r.nondecreasing),
        "non_cm": sum(1 for r in valid if r.cm is False),
        "errors": sum(1 for r in valid if r.error),
        "flag_failures": {
            name: sum(1 for r in valid if r.flags and not r.flags[name])
            for name in FLAG_NAMES
        },
    }


def records_to_json(records, config=None):
    doc = {"schema": SCHEMA, "summary": summarize(records),
           "records": [r.to_dict() for r in records]}
    if config is not None:
        doc["config"] = {k: v for k, v in asdict(config).items()
                         if k not in ("output_path", "jobs")}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def records_from_json(text):
    doc = json.loads(text)
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    return [SweepRecord.from_dict(d) for d in doc["records"]]


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ";".join(str(v) for v in value)
    return str(value)


def _parse_bool(text):
    return None if text == "" else text == "true"


def _parse_int(text):
    return None if text == "" else int(text)


def _parse_ints(text):
    return None if text == "" else tuple(int(v) for v in text.split(";"))


def _parse_names(text):
    return [] if text == "" else text.split(";")


def records_to_csv(records):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        row = dict(zip(("a1", "a2", "a3", "a4", "a21"), r.params))
        gens = r.generators or (None,) * 4
        row.update(zip(("n1", "n2", "n3", "n4"), gens))
        for key in ("valid", "failing", "coprime", "s", "basis_size",
                    "std_basis_verified", "cm", "nondecreasing", "q_degree",
                    "multiplicity", "failed_checks", "error"):
            row[key] = getattr(r, key)
        for name in FLAG_NAMES:
            row[name] = r.flags.get(name)
        writer.writerow({k: _cell(v) for k, v in row.items()})
    return buf.getvalue()


def records_from_csv(text):
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        gens = tuple(_parse_int(row[k]) for k in ("n1", "n2", "n3", "n4"))
        flags = {name: _parse_bool(row[name]) for name in FLAG_NAMES
                 if row[name] != ""}
        out.append(SweepRecord(
            params=tuple(int(row[k]) for k in ("a1", "a2", "a3", "a4", "a21")),
            valid=_parse_bool(row["valid"]),
            failing=_parse_names(row["failing"]),
            coprime=_parse_bool(row["coprime"]),
            generators=None if gens[0] is None else gens,
            s=_parse_ints(row["s"]),
            basis_size=_parse_int(row["basis_size"]),
            std_basis_verified=_parse_bool(row["std_basis_verified"]),
            cm=_parse_bool(row["cm"]),
            nondecreasing=_parse_bool(row["nondecreasing"]),
            q_degree=_parse_int(row["q_degree"]),
            multiplicity=_parse_int(row["multiplicity"]),
            flags=flags,
            failed_checks=_parse_names(row["failed_checks"]),
            error=row["error"] or None,
        ))
    return out
