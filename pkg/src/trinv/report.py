"""Text and machine-readable (JSON-compatible dict) renderings of results."""

from __future__ import annotations

from trinv.invariants import FalsifierReport, HilbertFunction, HsopCertificate, HsopUnknown
from trinv.poly import render
from trinv.verdict import Verdict


def _triple(t) -> str:
    return "x".join(map(str, t))


def hilbert_record(hf: HilbertFunction) -> dict:
    return {"dims": list(hf.dims)}


def hsop_record(cert: HsopCertificate | HsopUnknown) -> dict:
    rec = {
        "status": "certified" if cert.certified else "unknown",
        "polys": [render(f) for f in cert.polys],
        "degrees": list(cert.degrees),
        "power_exponents": dict(cert.power_exponents),
        "n_max": cert.n_max,
        "group_order": cert.group_order,
    }
    if cert.certified:
        rec["degree_product_ok"] = cert.degree_product_ok
    else:
        rec["missing"] = list(cert.missing)
    return rec


def hsop_text(cert: HsopCertificate | HsopUnknown) -> str:
    lines = [f"polys: {', '.join(render(f) for f in cert.polys)}",
             f"degrees: {cert.degrees}"]
    for v in "xyz":
        n = cert.power_exponents.get(v)
        lines.append(f"  {v}^{n} in ideal" if n else f"  no power of {v} in ideal up to N={cert.n_max}")
    if cert.certified:
        prod = cert.degrees[0] * cert.degrees[1] * cert.degrees[2]
        lines.append("common zero set is {0}: certified")
        lines.append(f"degree product {prod} vs |G| = {cert.group_order}: "
                     + ("equal, invariant ring is generated by these" if cert.degree_product_ok else "not equal"))
    else:
        lines.append("status: unknown")
    return "\n".join(lines)


def falsifier_record(rep: FalsifierReport) -> dict:
    return {
        "group_order": rep.group_order,
        "D": rep.D,
        "hilbert": list(rep.hf.dims),
        "candidates": [
            {"degrees": list(t), "first_mismatch": d} for t, d in rep.candidates.items()
        ],
        "verdict": rep.verdict,
    }


def falsifier_text(rep: FalsifierReport) -> str:
    lines = [f"|G| = {rep.group_order}, D = {rep.D}",
             f"hilbert: {list(rep.hf.dims)}"]
    for t, d in rep.candidates.items():
        lines.append(f"  {_triple(t)}: " + ("survives" if d is None else f"mismatch at degree {d}"))
    lines.append(f"verdict: {rep.verdict}")
    return "\n".join(lines)


def verdict_record(v: Verdict) -> dict:
    rec = {
        "outcome": v.outcome.value,
        "rule": v.rule,
        "reason": v.reason,
        "preconditions": dict(v.preconditions),
    }
    if v.falsifier is not None:
        rec["falsifier"] = falsifier_record(v.falsifier)
        rec["cross_check_agrees"] = v.cross_check_agrees
    if v.certificate is not None:
        rec["certificate"] = hsop_record(v.certificate)
    return rec


def verdict_text(v: Verdict) -> str:
    lines = [f"outcome: {v.outcome.value}", f"rule: {v.rule}", f"reason: {v.reason}"]
    lines += [f"  {k}: {val}" for k, val in v.preconditions.items()]
    if v.falsifier is not None:
        lines.append("falsifier:")
        lines += ["  " + s for s in falsifier_text(v.falsifier).splitlines()]
        lines.append(f"cross-check agrees: {v.cross_check_agrees}")
    return "\n".join(lines)
