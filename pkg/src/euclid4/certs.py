"""Certificate persistence and independent re-verification.

Schema "cert/v1".  Every integer is serialized as a decimal string so the
files are exact and language-neutral.  Verification never trusts stored
orders: the field is rebuilt from its defining data, the units and primes
are re-validated, and all five conditions are recomputed from scratch.
"""

from __future__ import annotations

import json

from .admissible import AdmissibleCertificate, Conclusion, brute_force_surjectivity, check_conditions
from .elements import NFElement
from .errors import CapExceeded, ConditionFailed, OracleMismatch, SchemaError
from .fields import FieldSpec, build_from_descriptor, field_descriptor
from .residues import DegreeOnePrime, degree_one_primes_above
from .units import Provenance, UnitData, verify_unit_data

SCHEMA_VERSION = "cert/v1"


def _prime_dict(P: DegreeOnePrime) -> dict:
    return {
        "p": str(P.p),
        "root_c": str(P.root_c.value),
        "lifted_c": str(P.lifted_c.value),
        "conjugate_index": str(P.conjugate_index),
        "basis_images": [str(v) for v in P.basis_images],
    }


def certificate_to_dict(cert: AdmissibleCertificate, label: str | None = None) -> dict:
    doc = {
        "version": SCHEMA_VERSION,
        "field": field_descriptor(cert.spec),
        "units": {
            "g": str(cert.units.g),
            "eta_coords": [str(c) for c in cert.units.eta.coords],
            "epsilon_coords": [str(c) for c in cert.units.epsilon.coords],
            "provenance": cert.units.provenance.value,
        },
        "P1": _prime_dict(cert.P1),
        "P2": _prime_dict(cert.P2),
        "orders": {
            "ord_eps_P1": str(cert.ord_eps_P1),
            "ord_eta_P1": str(cert.ord_eta_P1),
            "ord_eps_P2": str(cert.ord_eps_P2),
        },
        "gcds": list(cert.gcd_checks),
        "conclusion": cert.conclusion.value,
    }
    if label is not None:
        doc["label"] = label
    if cert.conclusion == Conclusion.EUCLIDEAN:
        doc["unit_rank"] = str(cert.unit_rank)
        doc["prime_count"] = str(cert.prime_count)
    return doc


def certificate_to_json(cert: AdmissibleCertificate, label: str | None = None) -> str:
    return json.dumps(certificate_to_dict(cert, label), indent=2, sort_keys=True) + "\n"


def _require(doc: dict, key: str):
    if key not in doc:
        raise SchemaError(f"missing key {key!r}")
    return doc[key]


def _as_int(value, what: str) -> int:
    if not isinstance(value, str):
        raise SchemaError(f"{what} must be a decimal string, got {type(value).__name__}")
    try:
        return int(value)
    except ValueError as exc:
        raise SchemaError(f"{what} is not a decimal integer: {value!r}") from exc


def _load_prime(doc: dict, spec: FieldSpec, what: str) -> DegreeOnePrime:
    p = _as_int(_require(doc, "p"), f"{what}.p")
    conj = _as_int(_require(doc, "conjugate_index"), f"{what}.conjugate_index")
    try:
        candidates = degree_one_primes_above(spec, p)
    except Exception as exc:
        raise SchemaError(f"{what}: {exc}") from exc
    if not 0 <= conj < len(candidates):
        raise SchemaError(f"{what}: conjugate index {conj} out of range")
    prime = candidates[conj]
    stored = (
        _as_int(doc["root_c"], "root"),
        _as_int(doc["lifted_c"], "lift"),
        tuple(_as_int(v, "image") for v in _require(doc, "basis_images")),
    )
    actual = (prime.root_c.value, prime.lifted_c.value, prime.basis_images)
    if stored != actual:
        raise SchemaError(f"{what}: stored prime data does not match recomputation")
    return prime


def parse_certificate(doc: dict) -> tuple[AdmissibleCertificate, str | None]:
    """Validate a certificate document and re-verify everything it claims.

    Raises SchemaError for structural problems, ConditionFailed(n) when a
    recomputed condition or stored order disagrees.
    """
    if not isinstance(doc, dict):
        raise SchemaError("certificate must be a JSON object")
    if _require(doc, "version") != SCHEMA_VERSION:
        raise SchemaError(f"unsupported version {doc['version']!r}")

    fdesc = _require(doc, "field")
    try:
        spec = build_from_descriptor(fdesc)
    except Exception as exc:
        raise SchemaError(f"field rebuild failed: {exc}") from exc
    if field_descriptor(spec) != {k: v for k, v in fdesc.items() if k != "label"}:
        raise SchemaError("field descriptor does not match the rebuilt field")

    udoc = _require(doc, "units")
    g = _as_int(_require(udoc, "g"), "units.g")
    eta = NFElement(spec, tuple(_as_int(v, "eta") for v in _require(udoc, "eta_coords")))
    eps = NFElement(spec, tuple(_as_int(v, "eps") for v in _require(udoc, "epsilon_coords")))
    try:
        prov = Provenance(_require(udoc, "provenance"))
    except ValueError as exc:
        raise SchemaError(f"bad provenance: {exc}") from exc
    units = UnitData(g, eta, eps, prov)
    if not verify_unit_data(units):
        raise SchemaError("unit data failed verification")

    P1 = _load_prime(_require(doc, "P1"), spec, "P1")
    P2 = _load_prime(_require(doc, "P2"), spec, "P2")

    result = check_conditions(spec, units, P1, P2)
    if not isinstance(result, AdmissibleCertificate):
        raise ConditionFailed(result.condition, str(result))

    stored_orders = _require(doc, "orders")
    for key, value, cond in (
        ("ord_eps_P1", result.ord_eps_P1, 1),
        ("ord_eta_P1", result.ord_eta_P1, 4),
        ("ord_eps_P2", result.ord_eps_P2, 5),
    ):
        if _as_int(_require(stored_orders, key), key) != value:
            raise ConditionFailed(cond, f"stored {key} disagrees with recomputed {value}")
    if list(_require(doc, "gcds")) != [True, True]:
        raise ConditionFailed(2, "stored gcd flags are not both true")

    conclusion = _require(doc, "conclusion")
    if conclusion not in (c.value for c in Conclusion):
        raise SchemaError(f"unknown conclusion {conclusion!r}")
    return result, doc.get("label")


def verify_certificate_json(text: str, oracle: bool = False,
                            cap: int = 10 ** 7) -> dict:
    """Full verification of a serialized certificate.

    Returns a small report dict; raises SchemaError / ConditionFailed /
    OracleMismatch on any defect.  With oracle=True the surjectivity
    enumeration is run as well whenever the group fits under the cap.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    cert, label = parse_certificate(doc)
    report = {
        "label": label,
        "field": cert.spec.name(),
        "pair": cert.pair,
        "orders": (cert.ord_eps_P1, cert.ord_eta_P1, cert.ord_eps_P2),
        "oracle_checked": False,
    }
    if oracle:
        try:
            ok = brute_force_surjectivity(cert.spec, cert.units, cert.P1, cert.P2, 2, 2, cap)
        except CapExceeded:
            ok = None
        if ok is False:
            raise OracleMismatch("surjectivity enumeration contradicts the certificate")
        report["oracle_checked"] = bool(ok)
    return report
