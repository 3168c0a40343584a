"""JSON and CSV forms for point sets, set systems, spaces, and certificates.

Rationals travel as "p/q" strings, never floats, so round-trips are exact.
Canonical bytes (sorted keys, fixed indentation, one trailing newline) make
independent runs byte-comparable. Every certificate document carries a
"schema" tag of the form name/version; check_certificate dispatches on it and
re-verifies the claim from scratch using only the kernel predicates.
"""

from __future__ import annotations

import csv
import io
import json

from .abstract import (
    AbstractGoodPartition,
    ConvexitySpace,
    abstract_separable,
    convexity_space,
)
from .errors import InputError
from .geometry import Hyperplane, PointSet, make_hyperplane, point_set
from .partitions import (
    EmptyIntersectionCertificate,
    GoodPartitionCertificate,
    PolyhedralSeparation,
    SConvexCover,
    SeparationCertificate,
    TupleWitness,
    joint_cover_empty,
    st_separability_report,
    verify_empty_intersection,
    verify_r_separation,
    verify_separation,
)
from .rational import parse_rat, rat_str
from .setsystems import SetSystem, ShatterProfile, set_system


def canonical_bytes(data) -> bytes:
    """Stable byte form of a JSON-ready structure."""
    return (json.dumps(data, sort_keys=True, indent=1) + "\n").encode("utf-8")


def canonical_text(data) -> str:
    return canonical_bytes(data).decode("utf-8")


def _need(data, key, kind):
    if not isinstance(data, dict) or key not in data:
        raise InputError(f"{kind} document is missing {key!r}")
    return data[key]


# ---------------------------------------------------------------- point sets

def point_set_data(ps: PointSet) -> dict:
    data = {"dim": ps.dim,
            "points": [[rat_str(c) for c in p] for p in ps.points]}
    if ps.labels is not None:
        data["labels"] = list(ps.labels)
    return data


def _coord(value):
    if isinstance(value, str):
        try:
            return parse_rat(value)
        except ValueError as err:
            raise InputError(f"bad rational literal {value!r}: {err}") from None
    if isinstance(value, int):
        return value
    raise InputError(f"coordinates must be 'p/q' strings or integers, "
                     f"got {type(value).__name__}")


def point_set_from_data(data) -> PointSet:
    rows = _need(data, "points", "point set")
    pts = [[_coord(c) for c in row] for row in rows]
    ps = point_set(pts, labels=data.get("labels"))
    if "dim" in data and int(data["dim"]) != ps.dim:
        raise InputError("declared dimension disagrees with the points")
    return ps


# ---------------------------------------------------------------- set systems

def set_system_data(sys: SetSystem, meta: str | None = None) -> dict:
    data = {"n": sys.n, "edges": [list(e) for e in sys.edge_indices()]}
    if meta is not None:
        data["meta"] = meta
    return data


def set_system_from_data(data) -> SetSystem:
    return set_system(int(_need(data, "n", "set system")),
                      _need(data, "edges", "set system"))


# ------------------------------------------------------------ abstract spaces

def space_data(space: ConvexitySpace) -> dict:
    return {"n": space.n, "family": [list(m) for m in space.member_sets]}


def space_from_data(data) -> ConvexitySpace:
    return convexity_space(int(_need(data, "n", "convexity space")),
                           _need(data, "family", "convexity space"))


# ------------------------------------------------------------ shatter profile

SHATTER_CSV_SCHEMA = "shatter-profile/1"


def shatter_profile_csv(profile: ShatterProfile) -> str:
    """CSV rows (m, computed, bound, pass) under a versioned comment line."""
    out = io.StringIO()
    r_part = "" if profile.r is None else profile.r
    out.write(f"# {SHATTER_CSV_SCHEMA} kind={profile.kind} "
              f"dimension={profile.dimension} r={r_part}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["m", "computed", "bound", "pass"])
    for row in profile.rows:
        writer.writerow([row.m, row.computed, row.bound,
                         "true" if row.ok else "false"])
    return out.getvalue()


def shatter_profile_data(profile: ShatterProfile) -> dict:
    return {"kind": profile.kind,
            "dimension": profile.dimension,
            "r": profile.r,
            "rows": [{"m": row.m, "computed": row.computed,
                      "bound": row.bound, "pass": row.ok}
                     for row in profile.rows],
            "all_ok": profile.all_ok}


# ----------------------------------------------------------------- primitives

def hyperplane_data(h: Hyperplane) -> dict:
    return {"normal": [rat_str(c) for c in h.normal],
            "offset": rat_str(h.offset)}


def hyperplane_from_data(data) -> Hyperplane:
    return make_hyperplane([_coord(c) for c in _need(data, "normal", "hyperplane")],
                           _coord(_need(data, "offset", "hyperplane")))


def _groups_data(groups) -> list:
    return [list(g) for g in groups]


def _groups_from_data(rows) -> tuple:
    return tuple(tuple(sorted(int(i) for i in g)) for g in rows)


# --------------------------------------------------------------- certificates

SEPARATION_SCHEMA = "separation/1"
EMPTY_INTERSECTION_SCHEMA = "empty-intersection/1"
GOOD_PARTITION_SCHEMA = "good-partition/1"
R_SEPARATION_SCHEMA = "r-separation/1"
ABSTRACT_PARTITION_SCHEMA = "abstract-good-partition/1"


def separation_data(cert: SeparationCertificate) -> dict:
    return {"schema": SEPARATION_SCHEMA,
            "points": point_set_data(cert.ps),
            "a_groups": _groups_data(cert.a_groups),
            "b_groups": _groups_data(cert.b_groups),
            "hyperplanes": [[hyperplane_data(h) for h in row]
                            for row in cert.hyperplanes]}


def separation_from_data(data) -> SeparationCertificate:
    ps = point_set_from_data(_need(data, "points", "separation"))
    return SeparationCertificate(
        ps,
        _groups_from_data(_need(data, "a_groups", "separation")),
        _groups_from_data(_need(data, "b_groups", "separation")),
        tuple(tuple(hyperplane_from_data(h) for h in row)
              for row in _need(data, "hyperplanes", "separation")))


def empty_intersection_data(cert: EmptyIntersectionCertificate) -> dict:
    return {"schema": EMPTY_INTERSECTION_SCHEMA,
            "points": point_set_data(cert.ps),
            "covers": [_groups_data(c.groups) for c in cert.covers],
            "witnesses": [{"choice": list(w.choice),
                           "classes": list(w.classes),
                           "farkas": [rat_str(y) for y in w.farkas]}
                          for w in cert.witnesses]}


def empty_intersection_from_data(data) -> EmptyIntersectionCertificate:
    ps = point_set_from_data(_need(data, "points", "empty intersection"))
    covers = tuple(SConvexCover(ps, _groups_from_data(rows))
                   for rows in _need(data, "covers", "empty intersection"))
    witnesses = tuple(
        TupleWitness(tuple(int(i) for i in _need(w, "choice", "witness")),
                     tuple(int(i) for i in _need(w, "classes", "witness")),
                     tuple(_coord(y) for y in _need(w, "farkas", "witness")))
        for w in _need(data, "witnesses", "empty intersection"))
    return EmptyIntersectionCertificate(ps, covers, witnesses)


def good_partition_data(ps: PointSet, cert: GoodPartitionCertificate) -> dict:
    params = {}
    for key, value in cert.params.items():
        params[key] = list(value) if isinstance(value, tuple) else value
    return {"schema": GOOD_PARTITION_SCHEMA,
            "points": point_set_data(ps),
            "kind": cert.kind,
            "partition": _groups_data(cert.partition),
            "enumerated": cert.enumerated,
            "closed_form": cert.closed_form,
            "params": params}


def good_partition_from_data(data):
    ps = point_set_from_data(_need(data, "points", "good partition"))
    params = dict(_need(data, "params", "good partition"))
    if "s_list" in params and params["s_list"] is not None:
        params["s_list"] = tuple(int(s) for s in params["s_list"])
    cert = GoodPartitionCertificate(
        str(_need(data, "kind", "good partition")),
        _groups_from_data(_need(data, "partition", "good partition")),
        int(_need(data, "enumerated", "good partition")),
        int(_need(data, "closed_form", "good partition")),
        params)
    return ps, cert


def r_separation_data(sep: PolyhedralSeparation) -> dict:
    ps = sep.covers[0].ground
    return {"schema": R_SEPARATION_SCHEMA,
            "points": point_set_data(ps),
            "covers": [_groups_data(c.groups) for c in sep.covers],
            "unions": [[[hyperplane_data(h) for h in piece] for piece in union]
                       for union in sep.unions],
            "emptiness": [{"choice": list(choice),
                           "farkas": [rat_str(y) for y in farkas]}
                          for choice, farkas in sep.emptiness]}


def r_separation_from_data(data):
    ps = point_set_from_data(_need(data, "points", "r-separation"))
    covers = tuple(SConvexCover(ps, _groups_from_data(rows))
                   for rows in _need(data, "covers", "r-separation"))
    unions = tuple(
        tuple(tuple(hyperplane_from_data(h) for h in piece) for piece in union)
        for union in _need(data, "unions", "r-separation"))
    emptiness = tuple(
        (tuple(int(i) for i in _need(e, "choice", "emptiness")),
         tuple(_coord(y) for y in _need(e, "farkas", "emptiness")))
        for e in _need(data, "emptiness", "r-separation"))
    return ps, PolyhedralSeparation(covers, unions, emptiness)


def abstract_partition_data(space: ConvexitySpace, subset,
                            found: AbstractGoodPartition) -> dict:
    return {"schema": ABSTRACT_PARTITION_SCHEMA,
            "space": space_data(space),
            "subset": list(subset),
            "partition": _groups_data(found.partition),
            "s": found.s,
            "t": found.t,
            "a_cover_count": found.a_cover_count,
            "b_cover_count": found.b_cover_count,
            "checked_pairs": found.checked_pairs}


# ----------------------------------------------------------------- re-checker

def _check_good_partition(data) -> bool:
    ps, cert = good_partition_from_data(data)
    if cert.kind == "radon":
        a, b = cert.partition
        s, t = int(cert.params["s"]), int(cert.params["t"])
        found, tried, closed = st_separability_report(ps, a, b, s, t)
        return (found is None and tried == cert.enumerated
                and closed == cert.closed_form)
    if cert.kind == "tverberg":
        s_list = list(cert.params["s_list"])
        return joint_cover_empty(ps, cert.partition, s_list) is None
    return False


def _check_abstract_partition(data) -> bool:
    space = space_from_data(_need(data, "space", "abstract partition"))
    a, b = _groups_from_data(_need(data, "partition", "abstract partition"))
    subset = tuple(sorted(int(i) for i in _need(data, "subset", "abstract partition")))
    if tuple(sorted(a + b)) != subset:
        return False
    s, t = int(_need(data, "s", "abstract partition")), int(data["t"])
    return abstract_separable(space, a, b, s, t) is None


def check_certificate(data) -> tuple:
    """(ok, schema) after re-deriving the certified claim from its inputs."""
    schema = _need(data, "schema", "certificate")
    if schema == SEPARATION_SCHEMA:
        return verify_separation(separation_from_data(data)), schema
    if schema == EMPTY_INTERSECTION_SCHEMA:
        return verify_empty_intersection(empty_intersection_from_data(data)), schema
    if schema == R_SEPARATION_SCHEMA:
        ps, sep = r_separation_from_data(data)
        return verify_r_separation(ps, sep), schema
    if schema == GOOD_PARTITION_SCHEMA:
        return _check_good_partition(data), schema
    if schema == ABSTRACT_PARTITION_SCHEMA:
        return _check_abstract_partition(data), schema
    raise InputError(f"unknown certificate schema {schema!r}")
