"""Outcome records for named verification checks.

A CheckRecord is the unit of persistence and reporting: one named check
at one parameter tuple.  ``inapplicable`` means a hypothesis failed
(for instance p | m), so parameter sweeps can scan rectangles without
special-casing; a ``fail`` always carries a witness concrete enough to
reproduce by hand.
"""

from __future__ import annotations

import functools
import inspect
import time
from dataclasses import dataclass

from .ring import NotAUnit

PASS = "pass"
FAIL = "fail"
INAPPLICABLE = "inapplicable"
ERROR = "error"

_STATUSES = {PASS, FAIL, INAPPLICABLE, ERROR}


@dataclass
class CheckRecord:
    check_id: str
    params: dict
    status: str
    witness: object = None
    conjectural: bool = False
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status not in _STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == FAIL and self.witness is None:
            raise ValueError("a failing record must carry a witness")

    @property
    def ok(self) -> bool:
        return self.status in (PASS, INAPPLICABLE)

    def to_json_dict(self) -> dict:
        # elapsed is deliberately left out: persisted output must be
        # byte-identical across reruns and degrees of parallelism.
        return {
            "check_id": self.check_id,
            "params": self.params,
            "status": self.status,
            "conjectural": self.conjectural,
            "witness": self.witness,
        }

    def sort_key(self):
        p = self.params
        return (self.check_id, p.get("p", 0), p.get("m", 0),
                p.get("r", 0), sorted((k, repr(v)) for k, v in p.items()))


def named_check(check_id: str, conjectural: bool = False):
    """Wrap a function returning (status, witness) into a CheckRecord factory.

    The wrapped function's bound arguments become the record's params;
    an unexpected non-unit denominator becomes an ``error`` record
    rather than an exception, so sweeps keep going.
    """
    def deco(fn):
        sig = inspect.signature(fn)

        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            bound = sig.bind(*args, **kwargs)
            bound.apply_defaults()
            params = dict(bound.arguments)
            start = time.perf_counter()
            try:
                status, witness = fn(*args, **kwargs)
            except NotAUnit as exc:
                status, witness = ERROR, f"non-unit denominator: {exc}"
            record = CheckRecord(check_id, params, status, witness,
                                 conjectural, time.perf_counter() - start)
            return record

        wrapper.check_id = check_id
        wrapper.conjectural = conjectural
        return wrapper
    return deco
