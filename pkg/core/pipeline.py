"""Pipeline that owns Π, the Weyl group and the categories C_{v,w} for one run."""

import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from config.run_config import RunConfig
from algebra import clear_idempotent_cache
from homdim import dimension_report, format_dimension, is_finite
from linalg import FieldSpec
from modcat import summand_count
from preproj import FrobeniusCategory, PreprojectiveAlgebra, clear_torsion_cache, preprojective
from weyl import (
    DynkinType,
    WeylElement,
    condition_P,
    element_from_word,
    enumerate_elements,
    format_word,
    parse_word,
    reduced_word,
)
from .exceptions import FrobCatError, HomologicalError, NotGorensteinWithinCutoff, TorsionError


logger = logging.getLogger(__name__)

MAX_VIRDIM = 2


def word_label(x: WeylElement) -> str:
    """Reduced word of x, with "e" for the identity."""
    return format_word(reduced_word(x)) or "e"

SURVEY_COLUMNS = (
    "type",
    "v",
    "w",
    "l_v",
    "l_w",
    "condition_P",
    "dim_P",
    "summands",
    "dim_Pi_vw",
    "virdim",
    "gldim",
    "frobenius_ok",
    "commutativity_ok",
    "phi2_injective",
    "phi2_surjective",
    "phi2_coker_dim",
)


@dataclass(frozen=True)
class SurveyRow:
    type: str
    v: str
    w: str
    l_v: int
    l_w: int
    condition_P: bool
    dim_P: int
    summands: int
    dim_Pi_vw: int
    virdim: str
    gldim: str
    frobenius_ok: bool
    commutativity_ok: bool
    phi2_injective: bool
    phi2_surjective: bool
    phi2_coker_dim: int

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class CategoryPipeline:
    """Builds and caches the objects of one run configuration; the torsion and idempotent caches start empty."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.dynkin: DynkinType = config.dynkin
        self.field: FieldSpec = config.field_spec
        self._pi: Optional[PreprojectiveAlgebra] = None
        self._elements: Optional[List[WeylElement]] = None
        self._index: Optional[Dict[WeylElement, int]] = None
        self._categories: Dict[Tuple[WeylElement, WeylElement], FrobeniusCategory] = {}
        clear_torsion_cache()
        clear_idempotent_cache()

    @property
    def pi(self) -> PreprojectiveAlgebra:
        if self._pi is None:
            self._pi = preprojective(self.dynkin, self.field, self.config.degree_cap)
        return self._pi

    @property
    def elements(self) -> List[WeylElement]:
        """W in a fixed order: by length, then by reduced word."""
        if self._elements is None:
            found = enumerate_elements(self.dynkin, self.config.enumeration_bound)
            self._elements = sorted(found, key=lambda x: (x.length, reduced_word(x)))
        return self._elements

    def pairs(self) -> List[Tuple[WeylElement, WeylElement]]:
        return [(v, w) for v in self.elements for w in self.elements]

    def element(self, word: str) -> WeylElement:
        return element_from_word(self.dynkin, parse_word(word))

    def rng_for(self, v: WeylElement, w: WeylElement) -> np.random.Generator:
        """Seed derived from the run seed and the pair, independent of scheduling."""
        if self._index is None:
            self._index = {x: k for k, x in enumerate(self.elements)}
        return np.random.default_rng([self.config.seed, self._index[v], self._index[w]])

    def category(self, v: WeylElement, w: WeylElement) -> FrobeniusCategory:
        key = (v, w)
        if key not in self._categories:
            self._categories[key] = FrobeniusCategory(
                self.pi, v, w, self.config.convention, self.rng_for(v, w), self.config.iso_attempts
            )
        return self._categories[key]

    def describe(self, v: WeylElement, w: WeylElement) -> str:
        return f"v=[{word_label(v)}] w=[{word_label(w)}] seed={self.config.seed}"

    def survey_row(self, v: WeylElement, w: WeylElement) -> SurveyRow:
        """One survey row; a failed Frobenius, commutativity or virdim check aborts with the pair and seed."""
        try:
            return self._survey_row(v, w)
        except FrobCatError as e:
            logger.error(f"Survey row failed for {self.describe(v, w)}: {e}")
            raise type(e)(f"{self.describe(v, w)}: {e}") from e

    def _survey_row(self, v: WeylElement, w: WeylElement) -> SurveyRow:
        cat = self.category(v, w)
        cutoff = self.config.cutoff
        commutes = cat.generators_agree()
        if not commutes:
            raise TorsionError("add f_v t_w(Π) differs from add t_w f_v(Π)")
        p = cat.generator
        base = dict(
            type=self.dynkin.label,
            v=word_label(v),
            w=word_label(w),
            l_v=v.length,
            l_w=w.length,
            condition_P=condition_P(v, w),
            dim_P=p.dim,
            commutativity_ok=commutes,
        )
        if p.dim == 0:
            if cat.injectives.dim != 0:
                raise TorsionError("C_{v,w} is zero but has nonzero injectives")
            return SurveyRow(
                **base, summands=0, dim_Pi_vw=0, virdim="0", gldim="0", frobenius_ok=True,
                phi2_injective=cat.phi2().injective, phi2_surjective=True, phi2_coker_dim=0,
            )
        frobenius = cat.is_frobenius()
        if not frobenius:
            raise TorsionError("add(P_{v,w}) differs from add of the injectives")
        algebra = cat.pi_vw()
        report = dimension_report(algebra, cutoff)
        virdim = report.virtual_dimension
        if not is_finite(virdim):
            raise NotGorensteinWithinCutoff(
                f"Π_vw is not Gorenstein within cutoff {cutoff}: injdim left "
                f"{format_dimension(report.left_injective, cutoff)}, right {format_dimension(report.right_injective, cutoff)}"
            )
        if virdim > MAX_VIRDIM:
            raise HomologicalError(f"virdim Π_vw = {virdim} exceeds {MAX_VIRDIM}")
        phi2 = cat.phi2()
        row = SurveyRow(
            **base,
            summands=summand_count(p, cat.rng),
            dim_Pi_vw=algebra.dim,
            virdim=format_dimension(virdim, cutoff),
            gldim=format_dimension(report.global_dimension, cutoff),
            frobenius_ok=frobenius,
            phi2_injective=phi2.injective,
            phi2_surjective=phi2.surjective,
            phi2_coker_dim=phi2.cokernel_dim,
        )
        logger.info(f"Survey row done: {row.v} | {row.w} virdim {row.virdim}")
        return row
