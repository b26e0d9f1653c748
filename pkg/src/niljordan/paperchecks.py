"""Full reproduction of the reference classification material.

run_verification recomputes the dimension-3 and dimension-4 tables, the
coboundary example, every printed contraction family, the deformation list,
the associativity remark, the squaring-map images of the associative
registry and the real-field remark, and collects every discrepancy between
the exact computation and the printed values as first-class errata items.

Errata are reported, never silently fixed: the literal families ship next to
their corrections, and each failing check carries the exact evidence (the
divergent exponent, the singular determinant, the misclassified limit with
its true class, or the totally-null-subspace obstruction).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .atlas import (
    PUBLISHED_ASSOCIATIVE_J4,
    PUBLISHED_REAL_ORBITS,
    PUBLISHED_SQUARING,
    PUBLISHED_TABLES,
    associative_registry,
    canonical_tensor,
    complex_labels,
    load_atlas,
    squaring_map,
)
from .classify import classify, classify_real
from .contractions import (
    ContractionFamily,
    contraction_obstruction,
    limit_of_family,
    search_witness,
    verify_edge,
)
from .deformations import (
    search_deformation_direction,
    verify_polynomial_deformation,
)
from .errors import DIVERGES, NOT_FOUND
from .graphs import FamilySpec, build_graph, rigidity_screen
from .invariants import coboundary_space_dim, derivation_dim
from .scalars import I
from .textio import parse_direction, parse_family

DATA_DIR = Path(__file__).parent / "data"


@dataclass
class CheckResult:
    name: str
    passed: bool
    info: str = ""


@dataclass
class ErratumItem:
    name: str
    detail: str
    data: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    checks: list
    errata: list
    sections: dict

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def lines(self):
        out = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            out.append(f"[{mark}] {c.name}" + (f" -- {c.info}" if c.info else ""))
        out.append("")
        out.append(f"errata ({len(self.errata)}):")
        for e in self.errata:
            out.append(f"  * {e.name}: {e.detail}")
        out.append("")
        out.append(
            f"summary: {sum(c.passed for c in self.checks)}/{len(self.checks)} "
            f"checks passed, {len(self.errata)} errata reported"
        )
        return out

    def to_json(self):
        payload = {
            "checks": [
                {"name": c.name, "passed": c.passed, "info": c.info}
                for c in self.checks
            ],
            "errata": [
                {"name": e.name, "detail": e.detail, "data": e.data}
                for e in self.errata
            ],
            "sections": self.sections,
            "summary": {
                "checks": len(self.checks),
                "passed": sum(c.passed for c in self.checks),
                "errata": len(self.errata),
                "ok": self.ok,
            },
        }
        return json.dumps(payload, sort_keys=True, indent=2, default=str)


#: (fixture name, group, source, target, expected status, expected actual class)
FAMILY_FIXTURES = (
    ("j3_1_to_3", "listed", "J3_1", "J3_3", "VERIFIED", None),
    ("j3_1_to_2", "listed", "J3_1", "J3_2", "VERIFIED", None),
    ("j4_1_to_7", "listed", "J4_1", "J4_7", "VERIFIED", None),
    ("j4_1_to_9", "listed", "J4_1", "J4_9", "VERIFIED", None),
    ("j4_1_to_10", "listed", "J4_1", "J4_10", "VERIFIED", None),
    ("j4_9_to_11", "listed", "J4_9", "J4_11", "SINGULAR", None),
    ("j4_10_to_11", "listed", "J4_10", "J4_11", "MISCLASSIFIED", "J4_12"),
    ("j4_11_to_12", "listed", "J4_11", "J4_12", "VERIFIED", None),
    ("j4_2_to_5", "listed", "J4_2", "J4_5", "VERIFIED", None),
    ("j4_3_to_6", "listed", "J4_3", "J4_6", "DIVERGES", None),
    ("j4_4_to_7", "listed", "J4_4", "J4_7", "VERIFIED", None),
    ("j4_4_to_8", "listed", "J4_4", "J4_8", "SINGULAR", None),
    ("j4_4_to_10", "listed", "J4_4", "J4_10", "MISCLASSIFIED", "J4_11"),
    ("j4_6_to_7", "listed", "J4_6", "J4_7", "VERIFIED", None),
    ("j4_6_to_8", "listed", "J4_6", "J4_8", "VERIFIED", None),
    ("j4_6_to_10", "listed", "J4_6", "J4_10", "VERIFIED", None),
    ("j4_7_to_9", "listed", "J4_7", "J4_9", "VERIFIED", None),
    ("j4_8_to_9", "listed", "J4_8", "J4_9", "VERIFIED", None),
    ("j4_3_to_6", "corrected", "J4_3", "J4_6", "VERIFIED", None),
    ("j4_9_to_11", "corrected", "J4_9", "J4_11", "VERIFIED", None),
    ("j4_10_to_11", "corrected", "J4_10", "J4_11", "VERIFIED", None),
    ("j4_2_to_3", "derived", "J4_2", "J4_3", "VERIFIED", None),
    ("j4_3_to_4", "derived", "J4_3", "J4_4", "VERIFIED", None),
    ("j4_5_to_6", "derived", "J4_5", "J4_6", "VERIFIED", None),
)

#: The printed deformation list, literally, including the duplicated entry.
PRINTED_DEFORMATIONS = (
    ("J4_3", "mu1", "J4_2"),
    ("J4_4", "mu2", "J4_3"),
    ("J4_6", "mu1", "J4_5"),
    ("J4_4", "mu2", "J4_3"),
)


def load_family_fixture(name, group):
    path = DATA_DIR / "families" / f"{name}__{group}.fam"
    return parse_family(path.read_text())


def load_direction_fixture(name):
    path = DATA_DIR / "directions" / f"{name}.def"
    return parse_direction(path.read_text())


def _check_tables(checks, errata, sections):
    atlas = load_atlas()
    rows = {}
    for label, published in PUBLISHED_TABLES.items():
        computed = atlas[label].expected_profile.table_row()
        rows[label] = {
            "computed": [list(computed[0]), computed[1], computed[2]],
            "published": [list(published[0]), published[1], published[2]],
            "published_matches": computed == published,
        }
        checks.append(
            CheckResult(
                f"table/{label}",
                True,
                f"s={computed[0]} orbit={computed[1]} center={computed[2]}"
                + ("" if computed == published else "  [differs from printed row]"),
            )
        )
        if computed != published:
            errata.append(
                ErratumItem(
                    f"table_row/{label}",
                    f"printed row claims {published}, exact computation gives "
                    f"{computed}; cross-checked against the dimension-4 rows "
                    f"for the laws extended by a central line",
                    rows[label],
                )
            )
    sections["tables"] = rows


def _check_coboundary_example(checks, errata, sections):
    phi = canonical_tensor("J3_1")
    cob = coboundary_space_dim(phi)
    der = derivation_dim(phi)
    ok = cob + der == 9 and cob == load_atlas()["J3_1"].expected_profile.dim_orbit
    checks.append(
        CheckResult(
            "coboundary_example/J3_1",
            ok,
            f"coboundary dim {cob}, derivation dim {der}",
        )
    )
    published = {"coboundary": 7, "derivation": 2}
    if (cob, der) != (7, 2):
        errata.append(
            ErratumItem(
                "coboundary_example",
                f"the worked example claims 7 coboundary parameters and orbit "
                f"dimension 7; the exact coboundary rank is {cob} (derivations "
                f"{der}): the displayed coboundaries span only {cob} "
                f"independent directions",
                {"computed": {"coboundary": cob, "derivation": der},
                 "published": published},
            )
        )
    sections["coboundary_example"] = {
        "computed": {"coboundary": cob, "derivation": der},
        "published": published,
    }


def _check_families(checks, errata, sections):
    results = {}
    specs_j3 = []
    specs_j4 = []
    for name, group, src, tgt, expected_status, expected_actual in FAMILY_FIXTURES:
        fam = load_family_fixture(name, group)
        edge = verify_edge(canonical_tensor(src), tgt, fam)
        key = f"{name}__{group}"
        got = (edge.status, edge.actual_class if edge.status == "MISCLASSIFIED" else None)
        ok = got == (expected_status, expected_actual)
        results[key] = {
            "source": src,
            "target": tgt,
            "group": group,
            "status": edge.status,
            "actual_class": edge.actual_class,
            "expected_status": expected_status,
        }
        info = edge.describe()
        checks.append(CheckResult(f"family/{key}", ok, info))
        if group == "listed" and edge.status != "VERIFIED":
            detail = {
                "SINGULAR": "the printed matrix is singular for every t",
                "DIVERGES": "the transported law has a pole at t -> 0",
                "MISCLASSIFIED": f"the limit exists but is of class {edge.actual_class}",
            }[edge.status]
            errata.append(
                ErratumItem(f"family/{name}", f"{src} -> {tgt}: {detail}", results[key])
            )
        if src.startswith("J3"):
            specs_j3.append(FamilySpec(key, src, tgt, fam, group))
        elif edge.verified:
            specs_j4.append(FamilySpec(key, src, tgt, fam, group))
    sections["families"] = results
    return specs_j3, specs_j4


def _check_erratum_searches(checks, errata, sections):
    payload = {}

    # 3 -> 6: the printed family has exponent 1 on the last image ("3/3");
    # probe the grid and confirm 3/2 is the unique exponent that verifies.
    src = canonical_tensor("J4_3")
    working = []
    grid = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3))
    for q in grid:
        fam = ContractionFamily.from_images(
            4, {1: [(1, 1, 1)], 2: [(1, 2, 2)], 3: [(1, 3, 3)], 4: [(I, q, 4)]}
        )
        edge = verify_edge(src, "J4_6", fam)
        if edge.verified:
            working.append(q)
    ok = working == [Fraction(3, 2)]
    checks.append(
        CheckResult(
            "erratum_search/j4_3_to_6_exponent",
            ok,
            f"verifying exponents in grid: {[str(q) for q in working]}",
        )
    )
    errata.append(
        ErratumItem(
            "family/j4_3_to_6_exponent",
            "the printed exponent t^(3/3) diverges; 3/2 is the unique exponent "
            "in the search grid whose family verifies",
            {"working_exponents": [str(q) for q in working]},
        )
    )
    payload["j4_3_to_6_exponent"] = [str(q) for q in working]

    # 9 -> 11 and 10 -> 11: the printed families fail; the bounded search
    # must supply verified replacements.
    for src_label, tgt in (("J4_9", "J4_11"), ("J4_10", "J4_11")):
        witness = search_witness(canonical_tensor(src_label), tgt)
        found = witness is not NOT_FOUND
        ok = found
        if found:
            edge = verify_edge(canonical_tensor(src_label), tgt, witness)
            ok = edge.verified
        checks.append(
            CheckResult(
                f"erratum_search/{src_label}_to_{tgt}",
                ok,
                "replacement found and verified" if ok else "no replacement found",
            )
        )
        payload[f"{src_label}_to_{tgt}"] = (
            [str(line) for line in witness.image_lines()] if found else "NOT_FOUND"
        )

    # 4 -> 8 and 4 -> 10: provably impossible; the search must come back
    # empty and the totally-null-subspace obstruction must certify it.
    for tgt in ("J4_8", "J4_10"):
        src4 = canonical_tensor("J4_4")
        witness = search_witness(src4, tgt, budget=200000)
        obstruction = contraction_obstruction(src4, canonical_tensor(tgt))
        ok = witness is NOT_FOUND and obstruction is not None
        checks.append(
            CheckResult(
                f"erratum_search/J4_4_to_{tgt}",
                ok,
                "search exhausted, obstruction certified: "
                f"null dim >= {obstruction['source_null_dim_at_least']} must embed "
                f"into null dim <= {obstruction['target_null_dim_at_most']}"
                if obstruction
                else "OBSTRUCTION MISSING",
            )
        )
        errata.append(
            ErratumItem(
                f"family/j4_4_to_{tgt.split('_')[1]}_impossible",
                f"no family can contract the (3,1) law with alpha+gamma^2 = 0, "
                f"beta = 0 onto {tgt}: it contains a 3-dimensional subspace "
                f"with all products zero, every contraction limit inherits "
                f"one, and {tgt} admits at most a 2-dimensional one",
                {
                    "source_null_dim_at_least": obstruction["source_null_dim_at_least"],
                    "target_null_dim_at_most": obstruction["target_null_dim_at_most"],
                }
                if obstruction
                else {},
            )
        )
        payload[f"J4_4_to_{tgt}"] = "NOT_FOUND (obstruction certified)"
    sections["erratum_searches"] = payload


def _check_deformations(checks, errata, sections):
    payload = {}
    seen = set()
    for idx, (base_label, mu_name, expected_cls) in enumerate(PRINTED_DEFORMATIONS, 1):
        base = canonical_tensor(base_label)
        direction = load_direction_fixture(mu_name)
        report = verify_polynomial_deformation(base, direction)
        ok = report.jordan_family and report.t1_class == expected_cls
        if not report.trivial and report.inequalities:
            ok = ok and all(report.inequalities.values())
        key = (base_label, mu_name)
        dup = key in seen
        seen.add(key)
        checks.append(
            CheckResult(
                f"deformation/{idx}_{base_label}+t*{mu_name}",
                ok,
                f"jordan family, t=1 class {report.t1_class}"
                + ("  [duplicate of an earlier entry]" if dup else ""),
            )
        )
        payload[f"{idx}_{base_label}+t*{mu_name}"] = {
            "jordan_family": report.jordan_family,
            "t1_class": report.t1_class,
            "duplicate": dup,
        }
        if dup:
            errata.append(
                ErratumItem(
                    "deformation/duplicate_entry",
                    f"the printed deformation list repeats {base_label}+t*{mu_name} "
                    f"while the surrounding text needs a family deforming the "
                    f"remaining laws over the class J4_5",
                    {"entry_index": idx},
                )
            )
    for base_label in ("J4_4", "J4_6"):
        found = search_deformation_direction(canonical_tensor(base_label), "J4_5")
        ok = found is not None
        info = "no direction found"
        if found:
            mu, rep = found
            prods = {f"e{i}*e{j}": [str(c) for c in v] for (i, j), v in mu.products().items()}
            info = f"direction {prods} gives t=1 class {rep.t1_class}"
            payload[f"search_{base_label}_to_J4_5"] = prods
        checks.append(CheckResult(f"deformation_search/{base_label}_to_J4_5", ok, info))
    sections["deformations"] = payload


def _check_associativity(checks, sections):
    atlas = load_atlas()
    computed = {
        lbl for lbl in complex_labels(4)
        if not lbl.endswith("_ab") and atlas[lbl].expected_profile.associative
    }
    ok = computed == PUBLISHED_ASSOCIATIVE_J4
    checks.append(
        CheckResult(
            "associative_remark/J4",
            ok,
            f"associative classes: {sorted(computed, key=_label_key)}",
        )
    )
    sections["associative_remark"] = sorted(computed, key=_label_key)


def _label_key(lbl):
    stem = lbl.split("_", 1)[1]
    return (0, int(stem)) if stem.isdigit() else (1, stem)


def _check_squaring(checks, errata, sections):
    registry = associative_registry()
    payload = {}
    for name in sorted(registry):
        image_class = classify(squaring_map(registry[name]))
        payload[name] = image_class
        base = "A3_b2" if name.startswith("A3_b2") else name
        claimed = PUBLISHED_SQUARING.get(base)
        ok = claimed is None or image_class == claimed
        if name == "A3_b2_mu_quarter" and image_class != claimed:
            # the degenerate sample: reported, not asserted
            ok = True
            errata.append(
                ErratumItem(
                    "squaring/b2_quarter_sample",
                    "the symmetrised image of the b2 law at mu = 1/4 degenerates "
                    f"to {image_class} (the form on <e1, e3> has determinant "
                    "mu - 1/4 = 0), while the printed statement asserts the "
                    "whole family lands in J3_2",
                    {"computed_class": image_class},
                )
            )
        checks.append(
            CheckResult(f"squaring/{name}", ok, f"image class {image_class}")
        )
    sections["squaring"] = payload


def _check_real_remark(checks, errata, sections):
    payload = {}
    atlas = load_atlas()
    # the two real contraction families of the remark
    for name, claimed_target in (("j3_real_f", "R3_4"), ("j3_real_g", "R3_5")):
        fam = load_family_fixture(name, "listed")
        lim = limit_of_family(canonical_tensor("R3_1"), fam)
        converged = lim is not DIVERGES
        real_class = classify_real(lim) if converged else None
        payload[name] = {
            "converged": converged,
            "claimed_target": claimed_target,
            "computed_real_class": real_class,
        }
        checks.append(
            CheckResult(
                f"real_remark/{name}",
                converged,
                f"limit exists, real class {real_class} (claimed {claimed_target})",
            )
        )
        if converged and real_class != claimed_target:
            errata.append(
                ErratumItem(
                    f"real_remark/{name}",
                    f"the remark presents this family as a contraction onto "
                    f"{claimed_target}; the computed limit classifies as {real_class}",
                    payload[name],
                )
            )
    # computed real classes and orbit dimensions of the remark laws
    r4 = canonical_tensor("R3_4")
    r5 = canonical_tensor("R3_5")
    computed = {
        "R3_4": {
            "real_class_of_canonical_tensor": classify_real(r4),
            "orbit_dim": atlas["R3_4"].expected_profile.dim_orbit,
            "claimed_orbit_dim": PUBLISHED_REAL_ORBITS["R3_4"],
        },
        "R3_5": {
            "real_class_of_canonical_tensor": classify_real(r5),
            "orbit_dim": atlas["R3_5"].expected_profile.dim_orbit,
            "claimed_orbit_dim": PUBLISHED_REAL_ORBITS["R3_5"],
        },
    }
    payload["laws"] = computed
    checks.append(
        CheckResult(
            "real_remark/orbit_dims",
            True,
            f"computed orbit dims R3_4={computed['R3_4']['orbit_dim']}, "
            f"R3_5={computed['R3_5']['orbit_dim']} "
            f"(claimed 5 and 6)",
        )
    )
    if classify_real(r4) == "R3_5":
        errata.append(
            ErratumItem(
                "real_remark/r4_collapses",
                "the remark claims every characteristic vector of the law "
                "e1*e2 = e3 has zero square over the reals; the rational basis "
                "e1+e2, 2*e3, e1-e2 squares one to a nonzero vector and the "
                "law is rationally isomorphic to the R3_5 form, so the two "
                "claimed real classes coincide",
                {"computed_class": "R3_5"},
            )
        )
    if computed["R3_5"]["orbit_dim"] != PUBLISHED_REAL_ORBITS["R3_5"]:
        errata.append(
            ErratumItem(
                "real_remark/orbit_dims",
                f"claimed orbit dimensions (R3_4, R3_5) = (5, 6); exact "
                f"computation gives ({computed['R3_4']['orbit_dim']}, "
                f"{computed['R3_5']['orbit_dim']})",
                computed,
            )
        )
    sections["real_remark"] = payload


def _check_components(checks, sections, specs_j3, specs_j4):
    j3 = build_graph(complex_labels(3), specs_j3)
    j4 = build_graph(complex_labels(4), specs_j4)
    reach1 = j3.reachable_from("J3_1")
    ok3 = set(complex_labels(3)) <= reach1 and j3.sources() == ["J3_1"]
    checks.append(
        CheckResult(
            "components/J3",
            ok3 and j3.is_strict_order(),
            f"classes reachable from J3_1: {sorted(reach1, key=_label_key)}",
        )
    )
    reach_1 = j4.reachable_from("J4_1")
    reach_2 = j4.reachable_from("J4_2")
    covered = set(complex_labels(4)) <= (reach_1 | reach_2)
    sources = j4.sources()
    ok4 = covered and sources == ["J4_1", "J4_2"] and j4.is_strict_order()
    checks.append(
        CheckResult(
            "components/J4",
            ok4,
            f"sources {sources}; from J4_1: {sorted(reach_1, key=_label_key)}; "
            f"from J4_2: {sorted(reach_2, key=_label_key)}",
        )
    )
    screen = rigidity_screen(j4)
    rigid_evidence = {
        lbl: info for lbl, info in screen.items() if info["no_incoming_edge"]
    }
    checks.append(
        CheckResult(
            "components/rigidity_screen",
            set(rigid_evidence) == {"J4_1", "J4_2"},
            f"no-incoming-edge classes: {sorted(rigid_evidence, key=_label_key)}",
        )
    )
    sections["components"] = {
        "J3_reachable_from_J3_1": sorted(reach1, key=_label_key),
        "J4_reachable_from_J4_1": sorted(reach_1, key=_label_key),
        "J4_reachable_from_J4_2": sorted(reach_2, key=_label_key),
        "J4_sources": sources,
    }
    return j3, j4


def run_verification():
    """Recompute everything and return the aggregated report."""
    checks = []
    errata = []
    sections = {}
    _check_tables(checks, errata, sections)
    _check_coboundary_example(checks, errata, sections)
    specs_j3, specs_j4 = _check_families(checks, errata, sections)
    _check_erratum_searches(checks, errata, sections)
    _check_deformations(checks, errata, sections)
    _check_associativity(checks, sections)
    _check_squaring(checks, errata, sections)
    _check_real_remark(checks, errata, sections)
    _check_components(checks, sections, specs_j3, specs_j4)
    return VerificationReport(checks=checks, errata=errata, sections=sections)
