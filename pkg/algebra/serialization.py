"""JSON shapes for algebras and quiver presentations."""

from typing import Any, Dict, List

import numpy as np

from core.exceptions import AlgebraError
from linalg import FieldSpec
from .algebra import Algebra
from .path_algebra import Arrow, Quiver
from .presentation import QuiverPresentation


def _vector_to_json(fld: FieldSpec, vec: np.ndarray) -> List[Any]:
    return [fld.scalar_to_json(x) for x in vec]


def algebra_to_json(algebra: Algebra) -> Dict[str, Any]:
    fld = algebra.field
    triples = [
        [int(i), int(j), int(k), fld.scalar_to_json(algebra.structure[i, j, k])]
        for i, j, k in zip(*np.nonzero(algebra.structure != 0))
    ]
    return {
        "field": fld.label,
        "name": algebra.name,
        "basis": list(algebra.labels),
        "structure": triples,
        "unit": _vector_to_json(fld, algebra.unit),
        "idempotents": [_vector_to_json(fld, e) for e in algebra.idempotents],
        "idempotent_labels": list(algebra.idempotent_labels),
    }


def algebra_from_json(data: Dict[str, Any]) -> Algebra:
    fld = FieldSpec.parse(data["field"])
    d = len(data["basis"])
    structure = fld.zeros((d, d, d))
    for i, j, k, c in data["structure"]:
        structure[i, j, k] = fld.scalar_from_json(c)
    return Algebra.build(
        fld,
        structure,
        [fld.scalar_from_json(c) for c in data["unit"]],
        data["basis"],
        [[fld.scalar_from_json(c) for c in e] for e in data.get("idempotents", [])],
        data.get("idempotent_labels") or None,
        name=data.get("name", ""),
    )


def presentation_to_json(presentation: QuiverPresentation) -> Dict[str, Any]:
    quiver = presentation.quiver
    fld = FieldSpec.parse(presentation.field_label) if presentation.field_label else FieldSpec()
    return {
        "field": fld.label,
        "vertices": [quiver.label_of(v) for v in range(quiver.vertex_count)],
        "arrows": [[a.source + 1, a.target + 1, a.label] for a in quiver.arrows],
        "relations": [
            [[fld.scalar_to_json(c), [quiver.arrows[a].label for a in path.arrows]] for c, path in relation]
            for relation in presentation.relations
        ],
        "degree_cap": presentation.degree_cap,
    }


def presentation_from_json(data: Dict[str, Any]) -> QuiverPresentation:
    fld = FieldSpec.parse(data["field"])
    vertices = [str(v) for v in data["vertices"]]
    try:
        arrows = tuple(Arrow(int(s) - 1, int(t) - 1, str(label)) for s, t, label in data["arrows"])
    except (TypeError, ValueError) as e:
        raise AlgebraError(f"Malformed arrow list: {e}") from e
    quiver = Quiver(len(vertices), arrows, tuple(vertices))
    relations = tuple(
        tuple((fld.scalar_from_json(c), quiver.path_by_labels(labels)) for c, labels in relation)
        for relation in data["relations"]
    )
    return QuiverPresentation(quiver, relations, int(data.get("degree_cap", 10)), fld.label)
