"""Textual interchange format: parser, serializer, and canonicalization.

Documents are JSON objects with a mandatory ``version`` and a ``kind`` tag
from: ``two_category``, ``two_ideal``, ``factorization_system``,
``pseudofunctor``, ``pseudonatural``, ``witness-bundle``,
``finite_category``, ``one_ideal``.  The schema is strict — unknown fields
are rejected — and every identifier a table references must be declared in
the same document.  ``serialize`` emits sorted object keys, identifier
lists sorted by a natural key (digit runs compare numerically), and a
trailing newline, so serialization is a normal form; ``parse∘serialize``
is the identity on documents already in that form.  ``canonicalize``
renames every cell to the stable scheme ``o0, o1, …`` / ``f0, …`` /
``a0, …`` in declaration order and is idempotent on serializer output.

Inside ``witness-bundle`` documents the functor tables reference derived
square and square-pair identifiers of the two pseudo-arrow 2-categories;
those are reconstructed from the base tables and the two classes, so
referential integrity for them is established when the bundle is rebuilt,
not at parse time.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Callable, Mapping

from .core import InputError, TwoCategory, natural_key
from .factor import FactorizationSystem, arrow_subcat
from .ideal import TwoIdeal
from .onecat import FiniteCategory, OneIdeal
from .pseudo import (PseudoFunctor, PseudoNatural, compose_pseudofunctors,
                     identity_pseudofunctor)

KINDS = ("two_category", "two_ideal", "factorization_system",
         "pseudofunctor", "pseudonatural", "witness-bundle",
         "finite_category", "one_ideal")


@dataclass(frozen=True)
class Document:
    """A parsed interchange document: format version, entity kind tag, and
    the payload tables keyed by field name."""

    version: int
    kind: str
    body: Mapping[str, Any]


def _rule(rule: str, msg: str) -> InputError:
    return InputError(f"schema rule '{rule}': {msg}")


# ---------------------------------------------------------------------------
# field schemas
# ---------------------------------------------------------------------------

# a field spec is ("list-str" | "rows" | "map" | "bool" | "nested" | "table",
#                  extra): "rows" carries the column names, "nested" the
# sub-schema name, "table" a dict of sub-fields.

_TWOCAT_FIELDS: dict[str, tuple] = {
    "objects": ("list-str",),
    "one_cells": ("rows", ("id", "src", "tgt")),
    "comp1": ("rows", ("g", "f", "gf")),
    "id1": ("map",),
    "two_cells": ("rows", ("id", "src", "tgt")),
    "vcomp": ("rows", ("b", "a", "ba")),
    "id2": ("map",),
    "lwhisker": ("rows", ("h", "a", "ha")),
    "rwhisker": ("rows", ("a", "e", "ae")),
}

_IDEAL_FIELDS: dict[str, tuple] = {
    "null_one_cells": ("list-str",),
    "null_two_cells": ("list-str",),
    "replacement": ("rows", ("a", "n", "b", "tilde", "nu")),
}

_FS_FIELDS: dict[str, tuple] = {
    "E": ("list-str",),
    "M": ("list-str",),
    "fact": ("rows", ("f", "e", "m", "theta")),
}

_FUNCTOR_TABLE_FIELDS: dict[str, tuple] = {
    "ob": ("map",),
    "one": ("map",),
    "two": ("map",),
    "compositor": ("rows", ("g", "f", "cell")),
}

_NATURAL_TABLE_FIELDS: dict[str, tuple] = {
    "component": ("map",),
    "structure": ("map",),
    "claims_equivalences": ("bool",),
}

_ONECAT_FIELDS: dict[str, tuple] = {
    "objects": ("list-str",),
    "morphisms": ("rows", ("id", "src", "tgt")),
    "comp": ("rows", ("g", "f", "gf")),
    "ident": ("map",),
}

_SCHEMAS: dict[str, dict[str, tuple]] = {
    "two_category": _TWOCAT_FIELDS,
    "two_ideal": {**_TWOCAT_FIELDS, **_IDEAL_FIELDS},
    "factorization_system": {**_TWOCAT_FIELDS, **_FS_FIELDS},
    "pseudofunctor": {
        "source": ("nested", "two_category"),
        "target": ("nested", "two_category"),
        **_FUNCTOR_TABLE_FIELDS,
    },
    "pseudonatural": {
        "source_functor": ("nested", "pseudofunctor"),
        "target_functor": ("nested", "pseudofunctor"),
        **_NATURAL_TABLE_FIELDS,
    },
    "witness-bundle": {
        "base": ("nested", "two_category"),
        **_FS_FIELDS,
        "k": ("table", _FUNCTOR_TABLE_FIELDS),
        "c": ("table", _FUNCTOR_TABLE_FIELDS),
        "eta": ("table", _NATURAL_TABLE_FIELDS),
        "epsilon": ("table", _NATURAL_TABLE_FIELDS),
    },
    "finite_category": _ONECAT_FIELDS,
    "one_ideal": {**_ONECAT_FIELDS, "null": ("list-str",)},
}


def _check_fields(body: Any, fields: dict[str, tuple], where: str) -> None:
    if not isinstance(body, dict):
        raise _rule("payload-object", f"{where or 'payload'} must be an "
                    f"object")
    unknown = sorted(set(body) - set(fields))
    if unknown:
        raise _rule("no-unknown-fields",
                    f"unknown field(s) {', '.join(unknown)} in "
                    f"{where or 'payload'}")
    missing = sorted(set(fields) - set(body))
    if missing:
        raise _rule("required-fields",
                    f"missing field(s) {', '.join(missing)} in "
                    f"{where or 'payload'}")
    for name, spec in fields.items():
        value = body[name]
        at = f"{where}{name}"
        shape = spec[0]
        if shape == "list-str":
            if not (isinstance(value, list)
                    and all(isinstance(x, str) for x in value)):
                raise _rule("field-type", f"{at} must be a list of strings")
        elif shape == "rows":
            cols = spec[1]
            if not isinstance(value, list):
                raise _rule("field-type", f"{at} must be a list of rows")
            for row in value:
                if (not isinstance(row, dict)
                        or set(row) != set(cols)
                        or not all(isinstance(row[c], str) for c in cols)):
                    raise _rule(
                        "row-shape",
                        f"each {at} row must have exactly the string "
                        f"fields {', '.join(cols)}")
        elif shape == "map":
            if (not isinstance(value, dict)
                    or not all(isinstance(k, str) and isinstance(v, str)
                               for k, v in value.items())):
                raise _rule("field-type",
                            f"{at} must be a string-to-string map")
        elif shape == "bool":
            if not isinstance(value, bool):
                raise _rule("field-type", f"{at} must be a boolean")
        elif shape == "nested":
            _check_fields(value, _SCHEMAS[spec[1]], f"{at}.")
        elif shape == "table":
            _check_fields(value, spec[1], f"{at}.")


# ---------------------------------------------------------------------------
# referential integrity
# ---------------------------------------------------------------------------

def _twocat_integrity(body: Mapping[str, Any], where: str,
                      dangling: list[str]) -> None:
    objects = set(body["objects"])
    ones = {row["id"] for row in body["one_cells"]}
    twos = {row["id"] for row in body["two_cells"]}

    def need(ref: str, pool: set[str], at: str) -> None:
        if ref not in pool:
            dangling.append(f"{ref} (at {where}{at})")

    for row in body["one_cells"]:
        need(row["src"], objects, f"one_cells[{row['id']}].src")
        need(row["tgt"], objects, f"one_cells[{row['id']}].tgt")
    for row in body["comp1"]:
        for col in ("g", "f", "gf"):
            need(row[col], ones, f"comp1.{col}")
    for obj, cell in body["id1"].items():
        need(obj, objects, "id1 key")
        need(cell, ones, f"id1[{obj}]")
    for row in body["two_cells"]:
        need(row["src"], ones, f"two_cells[{row['id']}].src")
        need(row["tgt"], ones, f"two_cells[{row['id']}].tgt")
    for row in body["vcomp"]:
        for col in ("b", "a", "ba"):
            need(row[col], twos, f"vcomp.{col}")
    for f, cell in body["id2"].items():
        need(f, ones, "id2 key")
        need(cell, twos, f"id2[{f}]")
    for row in body["lwhisker"]:
        need(row["h"], ones, "lwhisker.h")
        need(row["a"], twos, "lwhisker.a")
        need(row["ha"], twos, "lwhisker.ha")
    for row in body["rwhisker"]:
        need(row["a"], twos, "rwhisker.a")
        need(row["e"], ones, "rwhisker.e")
        need(row["ae"], twos, "rwhisker.ae")


def _ideal_integrity(body: Mapping[str, Any], dangling: list[str]) -> None:
    ones = {row["id"] for row in body["one_cells"]}
    twos = {row["id"] for row in body["two_cells"]}
    for n in body["null_one_cells"]:
        if n not in ones:
            dangling.append(f"{n} (at null_one_cells)")
    for a in body["null_two_cells"]:
        if a not in twos:
            dangling.append(f"{a} (at null_two_cells)")
    for row in body["replacement"]:
        for col in ("a", "n", "b", "tilde"):
            if row[col] not in ones:
                dangling.append(f"{row[col]} (at replacement.{col})")
        if row["nu"] not in twos:
            dangling.append(f"{row['nu']} (at replacement.nu)")


def _fs_integrity(body: Mapping[str, Any], prefix: str,
                  dangling: list[str], base: Mapping[str, Any]) -> None:
    ones = {row["id"] for row in base["one_cells"]}
    twos = {row["id"] for row in base["two_cells"]}
    for e in body["E"]:
        if e not in ones:
            dangling.append(f"{e} (at {prefix}E)")
    for m in body["M"]:
        if m not in ones:
            dangling.append(f"{m} (at {prefix}M)")
    for row in body["fact"]:
        for col in ("f", "e", "m"):
            if row[col] not in ones:
                dangling.append(f"{row[col]} (at {prefix}fact.{col})")
        if row["theta"] not in twos:
            dangling.append(f"{row['theta']} (at {prefix}fact.theta)")


def _functor_integrity(body: Mapping[str, Any], dangling: list[str]) -> None:
    src, tgt = body["source"], body["target"]
    pools = {
        "src-objects": set(src["objects"]),
        "tgt-objects": set(tgt["objects"]),
        "src-ones": {row["id"] for row in src["one_cells"]},
        "tgt-ones": {row["id"] for row in tgt["one_cells"]},
        "src-twos": {row["id"] for row in src["two_cells"]},
        "tgt-twos": {row["id"] for row in tgt["two_cells"]},
    }

    def need(ref: str, pool: str, at: str) -> None:
        if ref not in pools[pool]:
            dangling.append(f"{ref} (at {at})")

    for k, v in body["ob"].items():
        need(k, "src-objects", "ob key")
        need(v, "tgt-objects", f"ob[{k}]")
    for k, v in body["one"].items():
        need(k, "src-ones", "one key")
        need(v, "tgt-ones", f"one[{k}]")
    for k, v in body["two"].items():
        need(k, "src-twos", "two key")
        need(v, "tgt-twos", f"two[{k}]")
    for row in body["compositor"]:
        need(row["g"], "src-ones", "compositor.g")
        need(row["f"], "src-ones", "compositor.f")
        need(row["cell"], "tgt-twos", "compositor.cell")


def _onecat_integrity(body: Mapping[str, Any], dangling: list[str]) -> None:
    objects = set(body["objects"])
    mors = {row["id"] for row in body["morphisms"]}
    for row in body["morphisms"]:
        for col in ("src", "tgt"):
            if row[col] not in objects:
                dangling.append(
                    f"{row[col]} (at morphisms[{row['id']}].{col})")
    for row in body["comp"]:
        for col in ("g", "f", "gf"):
            if row[col] not in mors:
                dangling.append(f"{row[col]} (at comp.{col})")
    for obj, cell in body["ident"].items():
        if obj not in objects:
            dangling.append(f"{obj} (at ident key)")
        if cell not in mors:
            dangling.append(f"{cell} (at ident[{obj}])")
    for n in body.get("null", ()):
        if n not in mors:
            dangling.append(f"{n} (at null)")


def _check_integrity(kind: str, body: Mapping[str, Any]) -> None:
    dangling: list[str] = []
    if kind in ("two_category", "two_ideal", "factorization_system"):
        _twocat_integrity(body, "", dangling)
        if kind == "two_ideal":
            _ideal_integrity(body, dangling)
        if kind == "factorization_system":
            _fs_integrity(body, "", dangling, body)
    elif kind == "pseudofunctor":
        _twocat_integrity(body["source"], "source.", dangling)
        _twocat_integrity(body["target"], "target.", dangling)
        _functor_integrity(body, dangling)
    elif kind == "pseudonatural":
        for key in ("source_functor", "target_functor"):
            _twocat_integrity(body[key]["source"], f"{key}.source.", dangling)
            _twocat_integrity(body[key]["target"], f"{key}.target.", dangling)
            _functor_integrity(body[key], dangling)
    elif kind == "witness-bundle":
        _twocat_integrity(body["base"], "base.", dangling)
        _fs_integrity(body, "", dangling, body["base"])
    elif kind in ("finite_category", "one_ideal"):
        _onecat_integrity(body, dangling)
    if dangling:
        raise InputError("dangling references: " + "; ".join(dangling))


# ---------------------------------------------------------------------------
# parse / serialize / canonicalize
# ---------------------------------------------------------------------------

def parse(text: str) -> Document:
    """Parse interchange text into a :class:`Document`.

    Raises :class:`InputError` with line and column for malformed JSON, the
    violated schema rule for shape errors, and an exhaustive list of
    dangling references for integrity errors.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"parse error at line {exc.lineno}, column "
                         f"{exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise _rule("top-level-object", "document must be a JSON object")
    if data.get("version") != 1:
        raise _rule("version", f"unsupported version {data.get('version')!r}"
                    f" (expected 1)")
    kind = data.get("kind")
    if kind not in KINDS:
        raise _rule("kind", f"unknown kind {kind!r}")
    body = {k: v for k, v in data.items() if k not in ("version", "kind")}
    _check_fields(body, _SCHEMAS[kind], "")
    _check_integrity(kind, body)
    return Document(1, kind, body)


def _row_sorter(cols: tuple[str, ...]) -> Callable[[dict], tuple]:
    keys = cols[:-1] if len(cols) > 1 else cols
    return lambda row: tuple(natural_key(row[c]) for c in keys)


def _normalize(fields: dict[str, tuple], body: Mapping[str, Any]) -> dict:
    out: dict[str, Any] = {}
    for name, spec in fields.items():
        value = body[name]
        shape = spec[0]
        if shape == "list-str":
            out[name] = sorted(value, key=natural_key)
        elif shape == "rows":
            cols = spec[1]
            if name in ("one_cells", "two_cells", "morphisms"):
                sorter = _row_sorter(("id",))
            elif name == "fact":
                sorter = _row_sorter(("f",))
            else:
                sorter = _row_sorter(cols)
            out[name] = sorted((dict(sorted(r.items())) for r in value),
                               key=sorter)
        elif shape == "map":
            out[name] = dict(sorted(value.items(), key=lambda kv:
                             natural_key(kv[0])))
        elif shape == "bool":
            out[name] = value
        elif shape == "nested":
            out[name] = _normalize(_SCHEMAS[spec[1]], value)
        elif shape == "table":
            out[name] = _normalize(spec[1], value)
    return out


def serialize(doc: Document) -> str:
    """Emit the document's normal form: sorted keys, natural-sorted
    identifier lists and rows, two-space indentation, trailing newline."""
    if doc.kind not in KINDS:
        raise InputError(f"unknown kind {doc.kind!r}")
    payload = {"version": 1, "kind": doc.kind,
               **_normalize(_SCHEMAS[doc.kind], doc.body)}
    return json.dumps(payload, sort_keys=True, indent=2,
                      ensure_ascii=False) + "\n"


def _twocat_renames(body: Mapping[str, Any]) -> tuple[dict, dict, dict]:
    obj_map = {o: f"o{i}" for i, o in enumerate(body["objects"])}
    one_map = {row["id"]: f"f{i}"
               for i, row in enumerate(body["one_cells"])}
    two_map = {row["id"]: f"a{i}"
               for i, row in enumerate(body["two_cells"])}
    return obj_map, one_map, two_map


def _rename_twocat(body: Mapping[str, Any], obj_map: dict, one_map: dict,
                   two_map: dict) -> dict:
    return {
        "objects": [obj_map[o] for o in body["objects"]],
        "one_cells": [{"id": one_map[r["id"]], "src": obj_map[r["src"]],
                       "tgt": obj_map[r["tgt"]]}
                      for r in body["one_cells"]],
        "comp1": [{"g": one_map[r["g"]], "f": one_map[r["f"]],
                   "gf": one_map[r["gf"]]} for r in body["comp1"]],
        "id1": {obj_map[o]: one_map[c] for o, c in body["id1"].items()},
        "two_cells": [{"id": two_map[r["id"]], "src": one_map[r["src"]],
                       "tgt": one_map[r["tgt"]]}
                      for r in body["two_cells"]],
        "vcomp": [{"b": two_map[r["b"]], "a": two_map[r["a"]],
                   "ba": two_map[r["ba"]]} for r in body["vcomp"]],
        "id2": {one_map[f]: two_map[a] for f, a in body["id2"].items()},
        "lwhisker": [{"h": one_map[r["h"]], "a": two_map[r["a"]],
                      "ha": two_map[r["ha"]]} for r in body["lwhisker"]],
        "rwhisker": [{"a": two_map[r["a"]], "e": one_map[r["e"]],
                      "ae": two_map[r["ae"]]} for r in body["rwhisker"]],
    }


def _rename_derived(cell: str, one_map: dict, two_map: dict) -> str:
    """Rename a possibly derived identifier: declared cells by their own
    map, square and square-pair encodings componentwise."""
    if cell in one_map:
        return one_map[cell]
    if cell in two_map:
        return two_map[cell]
    parts = cell.split("|")
    if len(parts) == 5:
        f, g, a, b, phi = parts
        return "|".join([one_map[f], one_map[g], one_map[a], one_map[b],
                         two_map[phi]])
    if len(parts) == 12:
        return "|".join([
            _rename_derived("|".join(parts[0:5]), one_map, two_map),
            _rename_derived("|".join(parts[5:10]), one_map, two_map),
            two_map[parts[10]], two_map[parts[11]]])
    raise InputError(f"cannot canonicalize unknown cell {cell}")


def _rename_functor_tables(body: Mapping[str, Any], src_maps: tuple,
                           tgt_maps: tuple) -> dict:
    s_obj, s_one, s_two = src_maps
    t_obj, t_one, t_two = tgt_maps

    def src(cell: str) -> str:
        if cell in s_obj:
            return s_obj[cell]
        return _rename_derived(cell, s_one, s_two)

    def tgt(cell: str) -> str:
        if cell in t_obj:
            return t_obj[cell]
        return _rename_derived(cell, t_one, t_two)

    return {
        "ob": {src(k): tgt(v) for k, v in body["ob"].items()},
        "one": {src(k): tgt(v) for k, v in body["one"].items()},
        "two": {src(k): tgt(v) for k, v in body["two"].items()},
        "compositor": [{"g": src(r["g"]), "f": src(r["f"]),
                        "cell": tgt(r["cell"])}
                       for r in body["compositor"]],
    }


def canonicalize(doc: Document) -> Document:
    """Rename all cells to the stable scheme (objects ``o0, o1, …``,
    1-cells ``f0, …``, 2-cells ``a0, …``) in declaration order, rewriting
    derived square identifiers componentwise.  Idempotent on serializer
    output."""
    kind, body = doc.kind, doc.body
    if kind in ("two_category", "two_ideal", "factorization_system"):
        maps = _twocat_renames(body)
        obj_map, one_map, two_map = maps
        out = _rename_twocat(body, *maps)
        if kind == "two_ideal":
            out["null_one_cells"] = [one_map[n]
                                     for n in body["null_one_cells"]]
            out["null_two_cells"] = [two_map[a]
                                     for a in body["null_two_cells"]]
            out["replacement"] = [
                {"a": one_map[r["a"]], "n": one_map[r["n"]],
                 "b": one_map[r["b"]], "tilde": one_map[r["tilde"]],
                 "nu": two_map[r["nu"]]} for r in body["replacement"]]
        if kind == "factorization_system":
            out["E"] = [one_map[e] for e in body["E"]]
            out["M"] = [one_map[m] for m in body["M"]]
            out["fact"] = [{"f": one_map[r["f"]], "e": one_map[r["e"]],
                            "m": one_map[r["m"]],
                            "theta": two_map[r["theta"]]}
                           for r in body["fact"]]
        return Document(1, kind, out)
    if kind == "pseudofunctor":
        src_maps = _twocat_renames(body["source"])
        tgt_maps = _twocat_renames(body["target"])
        out = {
            "source": _rename_twocat(body["source"], *src_maps),
            "target": _rename_twocat(body["target"], *tgt_maps),
            **_rename_functor_tables(body, src_maps, tgt_maps),
        }
        return Document(1, kind, out)
    if kind == "pseudonatural":
        src_f = canonicalize(Document(1, "pseudofunctor",
                                      body["source_functor"])).body
        tgt_f = canonicalize(Document(1, "pseudofunctor",
                                      body["target_functor"])).body
        src_maps = _twocat_renames(body["source_functor"]["source"])
        tgt_maps = _twocat_renames(body["source_functor"]["target"])

        def src(cell: str) -> str:
            if cell in src_maps[0]:
                return src_maps[0][cell]
            return _rename_derived(cell, src_maps[1], src_maps[2])

        def tgt(cell: str) -> str:
            return _rename_derived(cell, tgt_maps[1], tgt_maps[2])

        out = {
            "source_functor": src_f,
            "target_functor": tgt_f,
            "component": {src(k): tgt(v)
                          for k, v in body["component"].items()},
            "structure": {src(k): tgt(v)
                          for k, v in body["structure"].items()},
            "claims_equivalences": body["claims_equivalences"],
        }
        return Document(1, kind, out)
    if kind == "witness-bundle":
        maps = _twocat_renames(body["base"])
        obj_map, one_map, two_map = maps
        derived_maps = (obj_map, one_map, two_map)

        def cell(x: str) -> str:
            if x in obj_map:
                return obj_map[x]
            return _rename_derived(x, one_map, two_map)

        out: dict[str, Any] = {"base": _rename_twocat(body["base"], *maps)}
        out["E"] = [one_map[e] for e in body["E"]]
        out["M"] = [one_map[m] for m in body["M"]]
        out["fact"] = [{"f": one_map[r["f"]], "e": one_map[r["e"]],
                        "m": one_map[r["m"]], "theta": two_map[r["theta"]]}
                       for r in body["fact"]]
        for key in ("k", "c"):
            out[key] = _rename_functor_tables(body[key], derived_maps,
                                              derived_maps)
        for key in ("eta", "epsilon"):
            sub = body[key]
            out[key] = {
                "component": {cell(k): cell(v)
                              for k, v in sub["component"].items()},
                "structure": {cell(k): cell(v)
                              for k, v in sub["structure"].items()},
                "claims_equivalences": sub["claims_equivalences"],
            }
        return Document(1, kind, out)
    if kind in ("finite_category", "one_ideal"):
        obj_map = {o: f"o{i}" for i, o in enumerate(body["objects"])}
        mor_map = {row["id"]: f"f{i}"
                   for i, row in enumerate(body["morphisms"])}
        out = {
            "objects": [obj_map[o] for o in body["objects"]],
            "morphisms": [{"id": mor_map[r["id"]],
                           "src": obj_map[r["src"]],
                           "tgt": obj_map[r["tgt"]]}
                          for r in body["morphisms"]],
            "comp": [{"g": mor_map[r["g"]], "f": mor_map[r["f"]],
                      "gf": mor_map[r["gf"]]} for r in body["comp"]],
            "ident": {obj_map[o]: mor_map[c]
                      for o, c in body["ident"].items()},
        }
        if kind == "one_ideal":
            out["null"] = [mor_map[n] for n in body["null"]]
        return Document(1, kind, out)
    raise InputError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# entity bridges
# ---------------------------------------------------------------------------

def _twocat_body(t: TwoCategory) -> dict[str, Any]:
    return {
        "objects": list(t.objects),
        "one_cells": [{"id": i, "src": s, "tgt": g}
                      for i, s, g in t.one_cells],
        "comp1": [{"g": g, "f": f, "gf": gf}
                  for (g, f), gf in t.comp1.items()],
        "id1": dict(t.id1),
        "two_cells": [{"id": i, "src": s, "tgt": g}
                      for i, s, g in t.two_cells],
        "vcomp": [{"b": b, "a": a, "ba": ba}
                  for (b, a), ba in t.vcomp.items()],
        "id2": dict(t.id2),
        "lwhisker": [{"h": h, "a": a, "ha": ha}
                     for (h, a), ha in t.lwhisker.items()],
        "rwhisker": [{"a": a, "e": e, "ae": ae}
                     for (a, e), ae in t.rwhisker.items()],
    }


def _body_twocat(body: Mapping[str, Any]) -> TwoCategory:
    return TwoCategory(
        objects=tuple(body["objects"]),
        one_cells=tuple((r["id"], r["src"], r["tgt"])
                        for r in body["one_cells"]),
        comp1={(r["g"], r["f"]): r["gf"] for r in body["comp1"]},
        id1=dict(body["id1"]),
        two_cells=tuple((r["id"], r["src"], r["tgt"])
                        for r in body["two_cells"]),
        vcomp={(r["b"], r["a"]): r["ba"] for r in body["vcomp"]},
        id2=dict(body["id2"]),
        lwhisker={(r["h"], r["a"]): r["ha"] for r in body["lwhisker"]},
        rwhisker={(r["a"], r["e"]): r["ae"] for r in body["rwhisker"]},
    )


def two_category_to_document(t: TwoCategory) -> Document:
    return Document(1, "two_category", _twocat_body(t))


def document_to_two_category(doc: Document) -> TwoCategory:
    if doc.kind not in ("two_category", "two_ideal", "factorization_system"):
        raise InputError(f"expected a 2-category document, got {doc.kind}")
    return _body_twocat(doc.body)


def _ideal_body(n: TwoIdeal) -> dict[str, Any]:
    return {
        "null_one_cells": list(n.null_one_cells),
        "null_two_cells": list(n.null_two_cells),
        "replacement": [
            {"a": a, "n": nl, "b": b, "tilde": tilde, "nu": nu}
            for (a, nl, b), (tilde, nu) in n.replacement.items()],
    }


def two_ideal_to_document(t: TwoCategory, n: TwoIdeal) -> Document:
    return Document(1, "two_ideal", {**_twocat_body(t), **_ideal_body(n)})


def document_to_two_ideal(doc: Document) -> tuple[TwoCategory, TwoIdeal]:
    if doc.kind != "two_ideal":
        raise InputError(f"expected a two_ideal document, got {doc.kind}")
    n = TwoIdeal(
        null_one_cells=tuple(doc.body["null_one_cells"]),
        null_two_cells=tuple(doc.body["null_two_cells"]),
        replacement={(r["a"], r["n"], r["b"]): (r["tilde"], r["nu"])
                     for r in doc.body["replacement"]},
    )
    return _body_twocat(doc.body), n


def _fs_body(fs: FactorizationSystem) -> dict[str, Any]:
    return {
        "E": list(fs.left_class),
        "M": list(fs.right_class),
        "fact": [{"f": f, "e": e, "m": m, "theta": theta}
                 for f, (e, m, theta) in fs.factorization.items()],
    }


def _body_fs(body: Mapping[str, Any]) -> FactorizationSystem:
    return FactorizationSystem(
        left_class=tuple(body["E"]),
        right_class=tuple(body["M"]),
        factorization={r["f"]: (r["e"], r["m"], r["theta"])
                       for r in body["fact"]},
    )


def fs_to_document(t: TwoCategory, fs: FactorizationSystem) -> Document:
    return Document(1, "factorization_system",
                    {**_twocat_body(t), **_fs_body(fs)})


def document_to_fs(doc: Document) -> tuple[TwoCategory,
                                           FactorizationSystem]:
    if doc.kind != "factorization_system":
        raise InputError(f"expected a factorization_system document, got "
                         f"{doc.kind}")
    return _body_twocat(doc.body), _body_fs(doc.body)


def _functor_tables(p: PseudoFunctor) -> dict[str, Any]:
    return {
        "ob": dict(p.ob),
        "one": dict(p.one),
        "two": dict(p.two),
        "compositor": [{"g": g, "f": f, "cell": cell}
                       for (g, f), cell in p.compositor.items()],
    }


def pseudofunctor_to_document(p: PseudoFunctor) -> Document:
    return Document(1, "pseudofunctor", {
        "source": _twocat_body(p.source),
        "target": _twocat_body(p.target),
        **_functor_tables(p),
    })


def document_to_pseudofunctor(doc: Document) -> PseudoFunctor:
    if doc.kind != "pseudofunctor":
        raise InputError(f"expected a pseudofunctor document, got "
                         f"{doc.kind}")
    return _body_pseudofunctor(doc.body)


def _body_pseudofunctor(body: Mapping[str, Any]) -> PseudoFunctor:
    return PseudoFunctor(
        source=_body_twocat(body["source"]),
        target=_body_twocat(body["target"]),
        ob=dict(body["ob"]),
        one=dict(body["one"]),
        two=dict(body["two"]),
        compositor={(r["g"], r["f"]): r["cell"]
                    for r in body["compositor"]},
    )


def pseudonatural_to_document(nat: PseudoNatural) -> Document:
    return Document(1, "pseudonatural", {
        "source_functor": pseudofunctor_to_document(
            nat.source_functor).body,
        "target_functor": pseudofunctor_to_document(
            nat.target_functor).body,
        "component": dict(nat.component),
        "structure": dict(nat.structure),
        "claims_equivalences": nat.claims_equivalences,
    })


def document_to_pseudonatural(doc: Document) -> PseudoNatural:
    if doc.kind != "pseudonatural":
        raise InputError(f"expected a pseudonatural document, got "
                         f"{doc.kind}")
    return PseudoNatural(
        source_functor=_body_pseudofunctor(doc.body["source_functor"]),
        target_functor=_body_pseudofunctor(doc.body["target_functor"]),
        component=dict(doc.body["component"]),
        structure=dict(doc.body["structure"]),
        claims_equivalences=doc.body["claims_equivalences"],
    )


def _natural_tables(nat: PseudoNatural) -> dict[str, Any]:
    return {
        "component": dict(nat.component),
        "structure": dict(nat.structure),
        "claims_equivalences": nat.claims_equivalences,
    }


def witness_bundle_to_document(t: TwoCategory, fs: FactorizationSystem,
                               k: PseudoFunctor, c: PseudoFunctor,
                               eta: PseudoNatural,
                               epsilon: PseudoNatural) -> Document:
    """Bundle one base 2-category, a factorization system on it, and the
    kernel/cokernel functors with unit and counit into one document.  The
    two pseudo-arrow 2-categories are not serialized; they are rebuilt from
    the classes on reconstruction."""
    return Document(1, "witness-bundle", {
        "base": _twocat_body(t),
        **_fs_body(fs),
        "k": _functor_tables(k),
        "c": _functor_tables(c),
        "eta": _natural_tables(eta),
        "epsilon": _natural_tables(epsilon),
    })


def document_to_witness_bundle(doc: Document) -> tuple[
        TwoCategory, FactorizationSystem, PseudoFunctor, PseudoFunctor,
        PseudoNatural, PseudoNatural]:
    if doc.kind != "witness-bundle":
        raise InputError(f"expected a witness-bundle document, got "
                         f"{doc.kind}")
    body = doc.body
    t = _body_twocat(body["base"])
    fs = _body_fs(body)
    e_arrow = arrow_subcat(t, fs.left_class)
    m_arrow = arrow_subcat(t, fs.right_class)

    def functor(tables: Mapping[str, Any], source, target) -> PseudoFunctor:
        return PseudoFunctor(
            source=source, target=target,
            ob=dict(tables["ob"]), one=dict(tables["one"]),
            two=dict(tables["two"]),
            compositor={(r["g"], r["f"]): r["cell"]
                        for r in tables["compositor"]})

    k = functor(body["k"], e_arrow.cat, m_arrow.cat)
    c = functor(body["c"], m_arrow.cat, e_arrow.cat)
    eta = PseudoNatural(
        source_functor=identity_pseudofunctor(e_arrow.cat),
        target_functor=compose_pseudofunctors(c, k),
        component=dict(body["eta"]["component"]),
        structure=dict(body["eta"]["structure"]),
        claims_equivalences=body["eta"]["claims_equivalences"])
    epsilon = PseudoNatural(
        source_functor=compose_pseudofunctors(k, c),
        target_functor=identity_pseudofunctor(m_arrow.cat),
        component=dict(body["epsilon"]["component"]),
        structure=dict(body["epsilon"]["structure"]),
        claims_equivalences=body["epsilon"]["claims_equivalences"])
    return t, fs, k, c, eta, epsilon


def finite_category_to_document(c: FiniteCategory) -> Document:
    return Document(1, "finite_category", {
        "objects": list(c.objects),
        "morphisms": [{"id": i, "src": s, "tgt": g}
                      for i, s, g in c.morphisms],
        "comp": [{"g": g, "f": f, "gf": gf}
                 for (g, f), gf in c.comp.items()],
        "ident": dict(c.ident),
    })


def document_to_finite_category(doc: Document) -> FiniteCategory:
    if doc.kind not in ("finite_category", "one_ideal"):
        raise InputError(f"expected a finite_category document, got "
                         f"{doc.kind}")
    return FiniteCategory(
        objects=tuple(doc.body["objects"]),
        morphisms=tuple((r["id"], r["src"], r["tgt"])
                        for r in doc.body["morphisms"]),
        comp={(r["g"], r["f"]): r["gf"] for r in doc.body["comp"]},
        ident=dict(doc.body["ident"]),
    )


def one_ideal_to_document(c: FiniteCategory, ideal: OneIdeal) -> Document:
    return Document(1, "one_ideal", {
        **finite_category_to_document(c).body,
        "null": sorted(ideal.null, key=natural_key),
    })


def document_to_one_ideal(doc: Document) -> tuple[FiniteCategory, OneIdeal]:
    if doc.kind != "one_ideal":
        raise InputError(f"expected a one_ideal document, got {doc.kind}")
    return (document_to_finite_category(doc),
            OneIdeal(null=frozenset(doc.body["null"])))
