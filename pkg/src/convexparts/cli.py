"""Command line front end.

Every subcommand prints one machine-readable document to stdout (JSON by
default, CSV for the profile-shaped outputs) and, with --out-dir, writes the
same bytes plus any certificate files there. Reports are canonical: re-running
a command with the same flags byte-reproduces every artifact, for any --jobs.

Exit codes: 0 verified/found, 2 property refuted with a counterexample,
3 resource cap hit, 4 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .abstract import (
    abstract_good_partition,
    halfspaces as abstract_halfspaces,
    is_separable,
    radon_number,
    tverberg_number,
    validate_space,
)
from .constructions import (
    convex_position,
    halfspace_4coloring,
    moment_adversary_exhaustive,
    moment_adversary_instance,
    moment_curve,
    periodic_coloring,
    translated_copies,
    tverberg_tight_instance,
    verify_periodic_line_cover,
)
from .errors import CapExceeded, InputError
from .geometry import point_set
from .partitions import (
    build_r_separation,
    f_search,
    good_radon_partition,
    good_tverberg_partition,
    joint_cover_empty,
    st_separability_report,
    st_separable,
)
from .ranges import halfspace_traces, intersect_close, union_close
from .rng import CounterRng
from .serialize import (
    abstract_partition_data,
    canonical_bytes,
    canonical_text,
    check_certificate,
    empty_intersection_data,
    good_partition_data,
    point_set_data,
    point_set_from_data,
    r_separation_data,
    separation_data,
    set_system_data,
    set_system_from_data,
    shatter_profile_csv,
    shatter_profile_data,
    space_from_data,
)
from .setsystems import (
    check_r_shatter,
    check_sauer,
    min_f_counting,
    r_vc_dim,
    vc_dim,
)

DEFAULT_CAP = 10**6


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; 2 means refuted here."""

    def error(self, message):
        raise InputError(message)


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--input")
    common.add_argument("--d", type=int)
    common.add_argument("--s", type=int)
    common.add_argument("--t", type=int)
    common.add_argument("--r", type=int)
    common.add_argument("--s-list", dest="s_list")
    common.add_argument("--n", type=int)
    common.add_argument("--a")
    common.add_argument("--b")
    common.add_argument("--parts")
    common.add_argument("--sampler", default="random-rational")
    common.add_argument("--samples", type=int, default=10)
    common.add_argument("--cap", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--out-dir", dest="out_dir")

    parser = _Parser(prog="convexparts",
                     description="Exact partition, shattering, and separation "
                                 "oracles for finite point sets.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ["vcdim", "rvcdim", "shatter", "rshatter", "bound-e31",
                 "traces", "radon", "tverberg", "separate", "build-separation",
                 "fsearch", "verify-cert"]:
        sub.add_parser(name, parents=[common])
    gen = sub.add_parser("gen", parents=[common])
    gen.add_argument("target", choices=["moment-curve", "convex-position",
                                        "periodic", "tight", "copies", "t42"])
    ver = sub.add_parser("verify", parents=[common])
    ver.add_argument("target", choices=["t999", "t42", "sauer", "rshatter",
                                        "f3", "abstract"])
    return parser


# ------------------------------------------------------------------- plumbing

def _load_json(path):
    if path is None:
        raise InputError("this subcommand needs --input")
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_points(path):
    data = _load_json(path)
    if "points" not in data:
        raise InputError("--input is not a point set document")
    return point_set_from_data(data)


def _load_system(path):
    data = _load_json(path)
    if "edges" not in data:
        if "points" in data:
            raise InputError("this subcommand consumes a set system; "
                             "run `traces` on the point set first")
        raise InputError("--input is not a set system document")
    return set_system_from_data(data)


def _int_list(text, flag):
    if text is None:
        raise InputError(f"this subcommand needs {flag}")
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise InputError(f"{flag} wants comma-separated integers") from None


def _part_lists(text, flag):
    if text is None:
        raise InputError(f"this subcommand needs {flag}")
    return [_int_list(chunk, flag) for chunk in text.split(";") if chunk]


def _require(args, *names):
    for name in names:
        if getattr(args, name.replace("-", "_")) is None:
            raise InputError(f"this subcommand needs --{name}")


def _cap(args, fallback=DEFAULT_CAP):
    return fallback if args.cap is None else args.cap


def _seed(args, fallback=0):
    return fallback if args.seed is None else args.seed


def _json_only(args):
    if args.format != "json":
        raise InputError("this subcommand emits JSON only")


def _profile_out(args, doc, profile, extra=None):
    """Report text honoring --format, plus the CSV profile artifact."""
    csv_text = shatter_profile_csv(profile)
    text = csv_text if args.format == "csv" else canonical_text(doc)
    artifacts = [("report.json", canonical_bytes(doc)),
                 ("profile.csv", csv_text.encode("utf-8"))]
    if extra:
        artifacts.extend(extra)
    return text, artifacts


# ----------------------------------------------------------------- dimensions

def _cmd_vcdim(args):
    _json_only(args)
    system = _load_system(args.input)
    doc = {"subcommand": "vcdim", "n": system.n, "edge_count": len(system),
           "vc_dim": vc_dim(system)}
    return 0, canonical_text(doc), [("report.json", canonical_bytes(doc))]


def _cmd_rvcdim(args):
    _json_only(args)
    _require(args, "r")
    system = _load_system(args.input)
    doc = {"subcommand": "rvcdim", "n": system.n, "edge_count": len(system),
           "r": args.r, "r_vc_dim": r_vc_dim(system, args.r, cap=_cap(args))}
    return 0, canonical_text(doc), [("report.json", canonical_bytes(doc))]


def _cmd_shatter(args):
    system = _load_system(args.input)
    profile = check_sauer(system, m_max=args.n, cap=_cap(args))
    doc = {"subcommand": "shatter", **shatter_profile_data(profile)}
    text, artifacts = _profile_out(args, doc, profile)
    return (0 if profile.all_ok else 2), text, artifacts


def _cmd_rshatter(args):
    _require(args, "r")
    system = _load_system(args.input)
    profile = check_r_shatter(system, args.r, m_max=args.n, cap=_cap(args))
    doc = {"subcommand": "rshatter", **shatter_profile_data(profile)}
    text, artifacts = _profile_out(args, doc, profile)
    return (0 if profile.all_ok else 2), text, artifacts


def _cmd_bound_e31(args):
    _json_only(args)
    _require(args, "d", "r")
    value = min_f_counting(args.d, args.r, f_cap=_cap(args))
    doc = {"subcommand": "bound-e31", "d": args.d, "r": args.r, "value": value}
    return 0, f"{value}\n", [("report.json", canonical_bytes(doc))]


def _cmd_traces(args):
    _json_only(args)
    ps = _load_points(args.input)
    family = halfspace_traces(ps)
    if args.t is not None:
        family = intersect_close(family, args.t, cap=_cap(args))
    if args.s is not None:
        family = union_close(family, args.s, cap=_cap(args))
    doc = set_system_data(family.to_set_system(), meta=family.provenance)
    doc["subcommand"] = "traces"
    return 0, canonical_text(doc), [("system.json", canonical_bytes(doc))]


# ------------------------------------------------------------------ searches

def _cmd_radon(args):
    _json_only(args)
    _require(args, "s", "t")
    ps = _load_points(args.input)
    bipartitions = (1 << len(ps)) - 2
    if bipartitions > _cap(args):
        raise CapExceeded("radon_bipartitions", _cap(args), bipartitions)
    cert = good_radon_partition(ps, range(len(ps)), args.s, args.t,
                                jobs=args.jobs)
    if cert is None:
        doc = {"subcommand": "radon", "found": False, "s": args.s, "t": args.t,
               "n": len(ps), "bipartitions": (1 << len(ps)) - 2}
        return 2, canonical_text(doc), [("report.json", canonical_bytes(doc))]
    cert_doc = good_partition_data(ps, cert)
    doc = {"subcommand": "radon", "found": True, "s": args.s, "t": args.t,
           "n": len(ps), "certificate": cert_doc}
    return 0, canonical_text(doc), [("report.json", canonical_bytes(doc)),
                                    ("certificate.json", canonical_bytes(cert_doc))]


def _cmd_tverberg(args):
    _json_only(args)
    _require(args, "r")
    ps = _load_points(args.input)
    if args.s_list is not None:
        s_list = _int_list(args.s_list, "--s-list")
    elif args.s is not None:
        s_list = [args.s] * args.r
    else:
        raise InputError("this subcommand needs --s or --s-list")
    cert = good_tverberg_partition(ps, range(len(ps)), args.r, s_list,
                                   cap=_cap(args), jobs=args.jobs)
    if cert is None:
        doc = {"subcommand": "tverberg", "found": False, "r": args.r,
               "s_list": list(s_list), "n": len(ps)}
        return 2, canonical_text(doc), [("report.json", canonical_bytes(doc))]
    cert_doc = good_partition_data(ps, cert)
    doc = {"subcommand": "tverberg", "found": True, "r": args.r,
           "s_list": list(s_list), "n": len(ps), "certificate": cert_doc}
    return 0, canonical_text(doc), [("report.json", canonical_bytes(doc)),
                                    ("certificate.json", canonical_bytes(cert_doc))]


def _cmd_separate(args):
    _json_only(args)
    _require(args, "s", "t")
    ps = _load_points(args.input)
    a = _int_list(args.a, "--a")
    b = _int_list(args.b, "--b")
    cert, tried, closed = st_separability_report(ps, a, b, args.s, args.t)
    if cert is None:
        doc = {"subcommand": "separate", "separable": False, "s": args.s,
               "t": args.t, "enumerated": tried, "closed_form": closed}
        return 2, canonical_text(doc), [("report.json", canonical_bytes(doc))]
    cert_doc = separation_data(cert)
    doc = {"subcommand": "separate", "separable": True, "s": args.s,
           "t": args.t, "certificate": cert_doc}
    return 0, canonical_text(doc), [("report.json", canonical_bytes(doc)),
                                    ("certificate.json", canonical_bytes(cert_doc))]


def _cmd_build_separation(args):
    _json_only(args)
    ps = _load_points(args.input)
    parts = _part_lists(args.parts, "--parts")
    if args.s_list is not None:
        s_list = _int_list(args.s_list, "--s-list")
    elif args.s is not None:
        s_list = [args.s] * len(parts)
    else:
        raise InputError("this subcommand needs --s or --s-list")
    cert = joint_cover_empty(ps, parts, s_list, cap=_cap(args))
    if cert is None:
        doc = {"subcommand": "build-separation", "built": False,
               "parts": [sorted(p) for p in parts], "s_list": list(s_list),
               "reason": "no cover choice has empty joint intersection"}
        return 2, canonical_text(doc), [("report.json", canonical_bytes(doc))]
    sep = build_r_separation(ps, cert.covers, cert, cap=_cap(args))
    empty_doc = empty_intersection_data(cert)
    sep_doc = r_separation_data(sep)
    doc = {"subcommand": "build-separation", "built": True,
           "parts": [sorted(p) for p in parts], "s_list": list(s_list),
           "facet_counts": [list(c) for c in sep.facet_counts],
           "empty_intersection": empty_doc, "separation": sep_doc}
    return 0, canonical_text(doc), [
        ("report.json", canonical_bytes(doc)),
        ("empty_intersection.json", canonical_bytes(empty_doc)),
        ("r_separation.json", canonical_bytes(sep_doc))]


def _cmd_fsearch(args):
    _json_only(args)
    _require(args, "d", "n")
    points = _load_points(args.input) if args.input is not None else None
    s_list = None if args.s_list is None else _int_list(args.s_list, "--s-list")
    report = f_search(args.d, args.n, args.sampler, samples=args.samples,
                      seed=_seed(args, "fsearch"), s=args.s, t=args.t,
                      r=args.r, s_list=s_list, points=points,
                      cap=_cap(args), jobs=args.jobs)
    params = {k: (list(v) if isinstance(v, tuple) else v)
              for k, v in report.params.items()}
    doc = {"subcommand": "fsearch", "mode": report.mode, "params": params,
           "sample_count": report.sample_count, "all_good": report.all_good,
           "witness_index": report.witness_index,
           "witness_transcript": report.witness_transcript,
           "witness": None if report.witness is None
           else point_set_data(report.witness),
           "certificates": [None if c is None
                            else good_partition_data(sample_ps, c)
                            for sample_ps, c in _fsearch_pairs(report, points)]}
    artifacts = [("report.json", canonical_bytes(doc))]
    if report.witness is not None:
        artifacts.append(("witness_points.json",
                          canonical_bytes(point_set_data(report.witness))))
    return (0 if report.all_good else 2), canonical_text(doc), artifacts


def _fsearch_pairs(report, points):
    """Certificates lack their sample's points; re-pair them for emission."""
    from .partitions import _sample_sets

    p = report.params
    if p["sampler"] == "file":
        return zip([points], report.certificates)
    sampled = _sample_sets(p["d"], p["n"], p["sampler"], len(report.certificates),
                           p["seed"], None)
    return zip(sampled, report.certificates)


# ---------------------------------------------------------------- generators

def _cmd_gen(args):
    _json_only(args)
    target = args.target
    if target == "moment-curve":
        _require(args, "n", "d")
        rng = None if args.seed is None else CounterRng(args.seed)
        doc = point_set_data(moment_curve(args.n, args.d, rng=rng))
        name = "points.json"
    elif target == "convex-position":
        _require(args, "n")
        rng = None if args.seed is None else CounterRng(args.seed)
        doc = point_set_data(convex_position(args.n, rng=rng))
        name = "points.json"
    elif target == "periodic":
        _require(args, "n", "r")
        doc = {"n": args.n, "r": args.r,
               "coloring": list(periodic_coloring(args.n, args.r))}
        name = "coloring.json"
    elif target == "tight":
        _require(args, "d", "r")
        attempts = 64 if args.cap is None else args.cap
        ps = tverberg_tight_instance(args.d, args.r, seed=_seed(args, "tight"),
                                     attempts=attempts)
        doc = point_set_data(ps)
        name = "points.json"
    elif target == "copies":
        _require(args, "s")
        ps = translated_copies(_load_points(args.input), args.s)
        doc = point_set_data(ps)
        name = "points.json"
    else:  # t42
        _require(args, "d", "s", "r")
        inst = moment_adversary_instance(args.d, args.s, args.r)
        doc = {"d": inst.d, "s": inst.s, "r": inst.r, "m": inst.m,
               "p": inst.p, "n": inst.n,
               "points": point_set_data(inst.points),
               "interval_index": list(inst.interval_index)}
        name = "instance.json"
    return 0, canonical_text(doc), [(name, canonical_bytes(doc))]


# ----------------------------------------------------------------- verifiers

def _verify_t999(args):
    _require(args, "r", "s")
    report = verify_periodic_line_cover(args.r, args.s, n=args.n)
    doc = {"subcommand": "verify", "target": "t999", "ok": report.ok,
           "r": report.r, "s": report.s, "n": report.n,
           "coloring": list(report.coloring),
           "choices_checked": report.choices_checked,
           "max_missed": report.max_missed, "miss_bound": report.miss_bound,
           "failure": None if report.failure is None
           else [[list(iv) for iv in cover] for cover in report.failure]}
    return (0 if report.ok else 2), doc, []


def _verify_t42(args):
    _require(args, "d", "s", "r")
    report = moment_adversary_exhaustive(args.d, args.s, args.r, jobs=args.jobs)
    doc = {"subcommand": "verify", "target": "t42", "ok": report.ok,
           "d": report.d, "s": report.s, "r": report.r, "n": report.n,
           "colorings_total": report.total, "verified": report.verified,
           "max_groups": report.max_groups,
           "first_failure": None if report.first_failure is None
           else list(report.first_failure)}
    return (0 if report.ok else 2), doc, []


def _verify_sauer(args):
    system = _load_system(args.input)
    profile = check_sauer(system, m_max=args.n, cap=_cap(args))
    doc = {"subcommand": "verify", "target": "sauer",
           "ok": profile.all_ok, **shatter_profile_data(profile)}
    return (0 if profile.all_ok else 2), doc, [
        ("profile.csv", shatter_profile_csv(profile).encode("utf-8"))]


def _verify_rshatter(args):
    _require(args, "r")
    system = _load_system(args.input)
    profile = check_r_shatter(system, args.r, m_max=args.n, cap=_cap(args))
    d = vc_dim(system)
    ceiling = min_f_counting(max(1, d), args.r) - 1
    consistent = profile.dimension <= ceiling
    doc = {"subcommand": "verify", "target": "rshatter",
           "ok": profile.all_ok and consistent, "vc_dim": d,
           "counting_ceiling": ceiling, "consistent": consistent,
           **shatter_profile_data(profile)}
    return (0 if doc["ok"] else 2), doc, [
        ("profile.csv", shatter_profile_csv(profile).encode("utf-8"))]


def _verify_f3(args):
    if args.input is not None:
        ps = _load_points(args.input)
    else:
        n = 9 if args.n is None else args.n
        rng = CounterRng(_seed(args), "f3")
        pts, seen = [], set()
        while len(pts) < n:
            p = tuple(rng.rat(64, 8) for _ in range(3))
            if p not in seen:
                seen.add(p)
                pts.append(p)
        ps = point_set(pts)
    if ps.dim != 3:
        raise InputError("this check runs on 3-dimensional points")
    coloring = halfspace_4coloring(ps)
    if coloring is None:
        doc = {"subcommand": "verify", "target": "f3", "ok": False,
               "n": len(ps), "reason": "no 4-coloring avoids monochromatic "
               "halfspace traces of size >= 2"}
        return 2, doc, []
    classes = [[i for i, c in enumerate(coloring) if c == k] for k in range(4)]
    big = max(classes, key=len)
    rest = [i for i in range(len(ps)) if i not in big]
    cert = st_separable(ps, big, rest, 2, 1)
    doc = {"subcommand": "verify", "target": "f3", "ok": cert is None,
           "n": len(ps), "coloring": list(coloring), "largest_class": big,
           "class_size": len(big)}
    artifacts = []
    if cert is not None:
        counter = separation_data(cert)
        doc["counterexample"] = counter
        artifacts.append(("counterexample.json", canonical_bytes(counter)))
    return (0 if cert is None else 2), doc, artifacts


def _verify_abstract(args):
    data = _load_json(args.input)
    space = space_from_data(data)
    ok, violation = validate_space(space)
    doc = {"subcommand": "verify", "target": "abstract", "ok": ok,
           "n": space.n, "members": len(space.family),
           "violation": None if violation is None else list(violation)}
    if ok:
        cap = _cap(args)
        doc["radon_number"] = radon_number(space, cap=cap)
        if args.r is not None:
            doc["tverberg_number"] = tverberg_number(space, args.r, cap=cap)
        separable, pair = is_separable(space, cap=cap)
        doc["separable"] = separable
        doc["first_inseparable"] = None if pair is None else [list(m) for m in pair]
        doc["halfspace_vc"] = vc_dim(abstract_halfspaces(space))
    return (0 if ok else 2), doc, []


_VERIFY = {"t999": _verify_t999, "t42": _verify_t42, "sauer": _verify_sauer,
           "rshatter": _verify_rshatter, "f3": _verify_f3,
           "abstract": _verify_abstract}


def _cmd_verify(args):
    if args.target in ("sauer", "rshatter") and args.format == "csv":
        pass
    else:
        _json_only(args)
    code, doc, artifacts = _VERIFY[args.target](args)
    if args.format == "csv":
        text = next(data.decode("utf-8") for name, data in artifacts
                    if name.endswith(".csv"))
    else:
        text = canonical_text(doc)
    return code, text, [("report.json", canonical_bytes(doc))] + artifacts


def _cmd_verify_cert(args):
    _json_only(args)
    data = _load_json(args.input)
    ok, schema = check_certificate(data)
    doc = {"subcommand": "verify-cert", "schema": schema, "ok": ok}
    return (0 if ok else 2), canonical_text(doc), [
        ("report.json", canonical_bytes(doc))]


_HANDLERS = {
    "vcdim": _cmd_vcdim,
    "rvcdim": _cmd_rvcdim,
    "shatter": _cmd_shatter,
    "rshatter": _cmd_rshatter,
    "bound-e31": _cmd_bound_e31,
    "traces": _cmd_traces,
    "radon": _cmd_radon,
    "tverberg": _cmd_tverberg,
    "separate": _cmd_separate,
    "build-separation": _cmd_build_separation,
    "fsearch": _cmd_fsearch,
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "verify-cert": _cmd_verify_cert,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        code, text, artifacts = _HANDLERS[args.command](args)
    except CapExceeded as err:
        print(f"resource cap: {err}", file=sys.stderr)
        return 3
    except ValueError as err:
        # InputError, JSON decode failures, and malformed numeric fields
        print(f"input error: {err}", file=sys.stderr)
        return 4
    except OSError as err:
        print(f"input error: {err}", file=sys.stderr)
        return 4
    if args.out_dir is not None:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for name, payload in artifacts:
            (out / name).write_bytes(payload)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
