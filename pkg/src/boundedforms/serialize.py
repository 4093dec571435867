"""JSON arrangement files and verification reports.

Rationals travel as strings ("2/3", "-1"), never floats, so files
round-trip bit-exactly.  Key order is fixed for stable machine output.
"""

import json
import re
from fractions import Fraction

from .arrangement import Arrangement, InputError

_RATIONAL_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def parse_rational(text):
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise InputError("invalid rational %r (expected 'p', '-p' or 'p/q')" % (text,))
    return Fraction(text.strip())


def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


def arrangement_from_dict(data):
    if not isinstance(data, dict):
        raise InputError("arrangement file must be a JSON object")
    try:
        ambient_dim = int(data["ambient_dim"])
        raw = data["hyperplanes"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError("missing or invalid arrangement fields: %s" % exc)
    if not isinstance(raw, list) or not raw:
        raise InputError("hyperplanes must be a nonempty list")
    hyperplanes = []
    for h in raw:
        try:
            normal = [parse_rational(e) for e in h["normal"]]
            offset = parse_rational(h["offset"])
        except (KeyError, TypeError) as exc:
            raise InputError("invalid hyperplane entry: %s" % exc)
        hyperplanes.append((normal, offset))
    return Arrangement(ambient_dim, hyperplanes)


def arrangement_to_dict(arr):
    return {
        "ambient_dim": arr.ambient_dim,
        "hyperplanes": [
            {
                "normal": [format_rational(a) for a in h.normal],
                "offset": format_rational(h.offset),
            }
            for h in arr.hyperplanes
        ],
    }


def load_arrangement(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise InputError("malformed JSON in %s: %s" % (path, exc))
    return arrangement_from_dict(data)


def save_arrangement(arr, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(arrangement_to_dict(arr), fh, indent=2)
        fh.write("\n")


def report_to_dict(report):
    """Lossless, deterministic serialization of a VerificationReport."""
    return {
        "ambient_dim": report.ambient_dim,
        "num_hyperplanes": report.num_hyperplanes,
        "num_regions": report.num_regions,
        "simple": report.simple,
        "coloop_free": report.coloop_free,
        "phi": [[int(e) for e in row] for row in report.phi],
        "gram": None
        if report.gram is None
        else [[int(e) for e in row] for row in report.gram],
        "identity_holds": report.identity_holds,
        "cycles_ok": report.cycles_ok,
        "psi_independent": report.psi_independent,
        "homology_rank_top": report.homology_rank_top,
        "rank_matches_r": report.rank_matches_r,
        "definiteness": {
            "verdict": report.definiteness.verdict,
            "minors": [format_rational(m) for m in report.definiteness.minors],
        },
        "theorem_verdict": report.theorem_verdict,
    }
