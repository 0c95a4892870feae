"""JSON shape for modules: sparse action matrices of the algebra generators.

Only the idempotents and arrows act explicitly (every basis element when the
algebra has no such presentation); the action of the remaining basis elements
is rebuilt from products of generators on load.
"""

from typing import Any, Dict, List, Sequence

import numpy as np

from algebra import Algebra
from core.exceptions import AlgebraMismatchError, NotAModuleError
from linalg import Subspace, stack_rows
from .module import Module


def _sparse(fld, vector: np.ndarray) -> List[List[Any]]:
    return [[int(i), fld.scalar_to_json(vector[i])] for i in np.nonzero(vector != 0)[0]]


def module_to_json(module: Module) -> Dict[str, Any]:
    fld = module.field
    generators = module.algebra.generators
    matrices = module.act_many(stack_rows(fld, generators, module.algebra.dim))
    entries = [
        [int(g), int(r), int(c), fld.scalar_to_json(matrices[g, r, c])]
        for g, r, c in zip(*np.nonzero(matrices != 0))
    ]
    return {
        "algebra": module.algebra.key,
        "field": fld.label,
        "dimension": module.dim,
        "name": module.name,
        "generators": [_sparse(fld, g) for g in generators],
        "action": entries,
    }


def _action_from_generators(algebra: Algebra, elements: Sequence[np.ndarray], matrices: np.ndarray) -> np.ndarray:
    """Full action tensor from the matrices of a generating set, closed under products with the unit."""
    fld = algebra.field
    m = matrices.shape[1]
    found = [fld.reduce(algebra.unit)]
    found_mats = [fld.eye(m)]
    span = Subspace.from_matrix(fld, stack_rows(fld, found, algebra.dim))
    frontier = list(zip(found, found_mats))
    while frontier and span.dim < algebra.dim:
        grown = []
        for x, mat in frontier:
            for g, g_mat in zip(elements, matrices):
                y = algebra.mul(g, x)
                if span.contains(y):
                    continue
                span = span.sum(Subspace.from_matrix(fld, y.reshape(1, -1)))
                found.append(y)
                found_mats.append(fld.matmul(g_mat, mat))
                grown.append((y, found_mats[-1]))
        frontier = grown
    if span.dim < algebra.dim:
        raise NotAModuleError(f"Stored generators span {span.dim} of {algebra.dim} dimensions")
    rows = stack_rows(fld, found, algebra.dim)
    flat = np.stack(found_mats).reshape(len(found_mats), m * m)
    action = fld.zeros((algebra.dim, m, m))
    for k in range(algebra.dim):
        coeffs = fld.solve(rows.T, algebra.basis_vector(k))
        action[k] = fld.matmul(coeffs.reshape(1, -1), flat).reshape(m, m)
    return action


def module_from_json(data: Dict[str, Any], algebra: Algebra) -> Module:
    if data["algebra"] != algebra.key:
        raise AlgebraMismatchError(f"Module was serialized over algebra {data['algebra'][:12]}...")
    fld = algebra.field
    m = int(data["dimension"])
    elements = []
    for sparse in data["generators"]:
        vector = fld.zeros(algebra.dim)
        for i, value in sparse:
            vector[i] = fld.scalar_from_json(value)
        elements.append(vector)
    matrices = fld.zeros((len(elements), m, m))
    for g, r, c, value in data["action"]:
        matrices[g, r, c] = fld.scalar_from_json(value)
    module = Module(algebra, _action_from_generators(algebra, elements, matrices), data.get("name", ""))
    module.check()
    return module
