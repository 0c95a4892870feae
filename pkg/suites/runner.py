"""Verification suites dispatched by name."""

import logging
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from config.run_config import RunConfig
from core.exceptions import FrobCatError, SuiteError
from core.pipeline import CategoryPipeline, word_label
from homdim import (
    fingerprint,
    format_dimension,
    global_dimension,
    gp_equivalence_check,
    gp_membership,
    is_finite,
    transpose_fingerprint,
    virtual_dimension,
)
from algebra import ideal_product
from linalg import FieldSpec
from modcat import (
    IsoVerdict,
    ext,
    is_isomorphic,
    random_hom,
    random_quotient_of_free,
    same_additive_closure,
    summand_count,
    syzygy,
)
from preproj import (
    FrobeniusCategory,
    class_containment,
    commutativity_counterexample,
    convention_names,
    duality_Phi,
    ideal_action_subspace,
    ideal_along_word,
    preprojective,
    preprojective_auslander_algebra,
    random_module,
    simple_torsion_ideal,
    torsion_apply,
    torsion_ideal,
    torsion_pair_violations,
)
from weyl import (
    DynkinType,
    WeylElement,
    alternative_reduced_word,
    condition_P,
    demazure_product,
    element_from_word,
    format_word,
    identity,
    longest_element,
)
from .report import SuiteReport


logger = logging.getLogger(__name__)

EXHAUSTIVE_PAIR_LIMIT = 36
TORSION_MODULES = 50
EXAMPLE_TYPE = "A3"
EXAMPLE_V = (2,)
EXAMPLE_W = (1, 3, 2, 1, 3)


class SuiteRunner:
    """Runs one named suite against a pipeline."""

    def __init__(self, config: RunConfig, pipeline: Optional[CategoryPipeline] = None):
        self.config = config
        self.pipeline = pipeline if pipeline is not None else CategoryPipeline(config)
        self.suite_handlers: Dict[str, Callable[[SuiteReport], None]] = {
            "frobenius": self._suite_frobenius,
            "equivalence": self._suite_equivalence,
            "syzygy": self._suite_syzygy,
            "induced-maps": self._suite_induced_maps,
            "morita": self._suite_morita,
            "kernel": self._suite_kernel,
            "injectives": self._suite_injectives,
            "factoring": self._suite_factoring,
            "duality": self._suite_duality,
            "commutativity": self._suite_commutativity,
            "u2-counterexample": self._suite_u2_counterexample,
            "birs": self._suite_birs,
            "torsion": self._suite_torsion,
            "convention": self._suite_convention,
            "virdim-bounds": self._suite_virdim_bounds,
            "example-leclerc": self._suite_example_leclerc,
        }

    @property
    def suite_names(self) -> List[str]:
        return list(self.suite_handlers)

    def run(self, suite: str) -> SuiteReport:
        """Run a suite; library errors become failed assertions with the seed."""
        if suite not in self.suite_handlers:
            raise SuiteError(f"Unknown suite: {suite}")
        report = SuiteReport(suite, self.config.type, self.config.seed)
        logger.info(f"Running suite: {suite} on {self.config.type}")
        try:
            self.suite_handlers[suite](report)
        except FrobCatError as e:
            logger.error(f"Suite {suite} aborted: {e}")
            report.check(f"{suite} completed", False, str(e), self.config.seed)
        logger.info(f"Suite {suite}: {len(report.assertions) - len(report.failures)}/{len(report.assertions)} passed")
        return report

    # -- helpers ---------------------------------------------------------------

    @property
    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.config.seed)

    def _example_pair(self) -> Optional[Tuple[WeylElement, WeylElement]]:
        if self.config.type != EXAMPLE_TYPE:
            return None
        dynkin = self.pipeline.dynkin
        return element_from_word(dynkin, EXAMPLE_V), element_from_word(dynkin, EXAMPLE_W)

    def _pairs(self, limit: Optional[int] = None, exhaustive: bool = False) -> List[Tuple[WeylElement, WeylElement]]:
        """All pairs for small groups or exhaustive runs, else the example pair plus a seeded sample."""
        pairs = self.pipeline.pairs()
        limit = limit if limit is not None else self.config.samples
        if len(pairs) <= EXHAUSTIVE_PAIR_LIMIT or (exhaustive and self.config.exhaustive_pairs):
            return pairs
        chosen = [pairs[i] for i in sorted(self.rng.choice(len(pairs), size=min(limit, len(pairs)), replace=False))]
        example = self._example_pair()
        if example is not None and example not in chosen:
            chosen.insert(0, example)
        return chosen

    def _label(self, v: WeylElement, w: WeylElement) -> str:
        return f"({word_label(v)} | {word_label(w)})"

    def _cat(self, v: WeylElement, w: WeylElement) -> FrobeniusCategory:
        return self.pipeline.category(v, w)

    # -- category suites -------------------------------------------------------

    def _suite_frobenius(self, report: SuiteReport) -> None:
        for v, w in self._pairs():
            cat = self._cat(v, w)
            report.check(f"add P = add I {self._label(v, w)}", cat.is_frobenius(), seed=self.config.seed)

    def _suite_commutativity(self, report: SuiteReport) -> None:
        for v, w in self._pairs(exhaustive=True):
            cat = self._cat(v, w)
            iso = "≅" if cat.generators_isomorphic() else "same add, other multiplicities"
            report.check(f"add f_v t_w Π = add t_w f_v Π {self._label(v, w)}", cat.generators_agree(), iso)

    def _suite_injectives(self, report: SuiteReport) -> None:
        for v, w in self._pairs():
            cat = self._cat(v, w)
            injectives = cat.injectives
            report.check(f"injectives in C {self._label(v, w)}", cat.contains(injectives))
            if injectives.dim == 0:
                continue
            for k, x in enumerate([cat.generator] + cat.sample_modules(2)):
                if x.dim:
                    value = ext(x, injectives, 1, self.config.cutoff)
                    report.check(f"Ext^1(X{k}, I) = 0 {self._label(v, w)}", value == 0, f"dim {value}",
                                 self.config.seed)

    def _suite_kernel(self, report: SuiteReport) -> None:
        fld = self.pipeline.field
        rng = self.rng
        for v, w in self._pairs(5):
            cat = self._cat(v, w)
            if cat.generator.dim == 0:
                continue
            label = self._label(v, w)
            modules = [cat.generator] + [m for m in cat.sample_modules(3) if m.dim]
            for k, x in enumerate(modules):
                y = modules[(k + 1) % len(modules)]
                f = random_hom(x, y, rng)
                kc = cat.kernel_cokernel(f)
                report.check(f"kernel in C {label} #{k}", cat.contains(kc.kernel), seed=self.config.seed)
                report.check(f"cokernel in C {label} #{k}", cat.contains(kc.cokernel), seed=self.config.seed)
                report.check(f"f ∘ ker = 0 {label} #{k}", fld.is_zero(fld.matmul(f.matrix, kc.kernel_map.matrix)))
                report.check(f"coker ∘ f = 0 {label} #{k}", fld.is_zero(fld.matmul(kc.cokernel_map.matrix, f.matrix)))
                report.check(
                    f"kernel dim by trace {label} #{k}",
                    kc.kernel_dim_by_trace == kc.kernel.dim,
                    f"{kc.kernel_dim_by_trace} vs {kc.kernel.dim}",
                )
                report.check(f"kernel universal {label} #{k}", cat.kernel_universal(f, cat.generator))

    def _suite_induced_maps(self, report: SuiteReport) -> None:
        for v, w in self._pairs():
            cat = self._cat(v, w)
            label = self._label(v, w)
            phi2, tau1 = cat.induced_maps()
            report.check(f"phi2 multiplicative {label}", phi2.is_homomorphism)
            report.check(f"tau1 multiplicative {label}", tau1.is_homomorphism)
            if condition_P(v, w):
                report.check(f"phi2 surjective under (P) {label}", phi2.surjective, f"coker {phi2.cokernel_dim}")
                report.check(f"tau1 surjective under (P) {label}", tau1.surjective, f"coker {tau1.cokernel_dim}")
            if v == identity(v.dynkin) and self.config.convention == "w0-inverse":
                report.check(f"phi2 bijective at v = e {label}", phi2.injective and phi2.surjective)

    def _suite_factoring(self, report: SuiteReport) -> None:
        for v, w in self._pairs():
            cat = self._cat(v, w)
            label = self._label(v, w)
            phi2, tau1 = cat.induced_maps()
            over_tv, over_fw = cat.factoring_dims()
            report.check(f"ker phi2 = maps into t_v {label}", phi2.kernel_matches_factoring)
            report.check(f"ker tau1 = maps through f_w {label}", tau1.kernel_matches_factoring)
            report.check(
                f"dim ker phi2 = dim Hom(t_w Π, t_v t_w Π) {label}",
                phi2.source_dim - phi2.rank == over_tv,
                f"{phi2.source_dim - phi2.rank} vs {over_tv}",
            )
            report.check(
                f"dim ker tau1 = dim Hom(f_w f_v Π, f_v Π) {label}",
                tau1.source_dim - tau1.rank == over_fw,
                f"{tau1.source_dim - tau1.rank} vs {over_fw}",
            )

    # -- homological suites ----------------------------------------------------

    def _suite_equivalence(self, report: SuiteReport) -> None:
        for v, w in self._pairs(5):
            cat = self._cat(v, w)
            if cat.generator.dim == 0:
                continue
            result = gp_equivalence_check(cat, self.config.samples, self.config.seed, self.config.cutoff)
            report.check(
                f"Hom(P, -) exact equivalence onto GP {self._label(v, w)}",
                result.passed,
                "; ".join(result.failures),
                self.config.seed,
            )

    def _suite_syzygy(self, report: SuiteReport) -> None:
        rng = self.rng
        for v, w in self._pairs(5):
            cat = self._cat(v, w)
            if cat.generator.dim == 0:
                continue
            algebra = cat.pi_vw()
            d = virtual_dimension(algebra, self.config.cutoff)
            for k in range(self.config.samples):
                module = random_quotient_of_free(algebra, 1, int(rng.integers(1, 3)), rng)
                omega = syzygy(module, 2, self.config.cutoff)
                report.check(
                    f"Ω² is Gorenstein-projective {self._label(v, w)} #{k}",
                    omega.dim == 0 or gp_membership(omega.algebra, omega, d, self.config.cutoff),
                    seed=self.config.seed,
                )

    def _suite_morita(self, report: SuiteReport) -> None:
        e = identity(self.pipeline.dynkin)
        for v, w in self._pairs():
            if not condition_P(v, w):
                continue
            cat = self._cat(v, w)
            if cat.generator.dim == 0:
                continue
            v_prime = w * v.inverse()
            target = self._cat(e, v_prime).pi_w()
            left, right = fingerprint(cat.pi_vw()), fingerprint(target)
            report.check(
                f"Π_vw Morita-consistent with Π_v' {self._label(v, w)}", left == right, f"{left} vs {right}"
            )
            d = virtual_dimension(cat.pi_vw(), self.config.cutoff)
            report.check(f"virdim Π_vw = virdim Π_v' <= 1 {self._label(v, w)}",
                         d == virtual_dimension(target, self.config.cutoff) and d <= 1, f"virdim {d}")

    def _suite_virdim_bounds(self, report: SuiteReport) -> None:
        cutoff = self.config.cutoff
        seen = set()
        pairs = self._pairs(exhaustive=True)
        for v, w in pairs:
            cat = self._cat(v, w)
            if cat.generator.dim == 0:
                continue
            algebra = cat.pi_vw()
            d = virtual_dimension(algebra, cutoff)
            report.check(f"virdim Π_vw <= 2 {self._label(v, w)}", d <= 2, f"virdim {d}")
            g = global_dimension(algebra, cutoff)
            if is_finite(g):
                report.check(f"gldim = virdim when finite {self._label(v, w)}", g == d, f"gldim {g}")
            seen.add(d)
            for x, ring, name in ((w, cat.torsion_split.torsion, "Π_w"), (v, cat.free_split.free, "Π^v")):
                if (name, x) in seen or ring.dim == 0:
                    continue
                seen.add((name, x))
                value = virtual_dimension(cat.pi_w() if name == "Π_w" else cat.pi_upper_v(), cutoff)
                report.check(f"virdim {name} <= 1 [{word_label(x)}]", value <= 1, f"virdim {value}")
        values = sorted(x for x in seen if isinstance(x, int))
        report.check("virdim spectrum recorded", True, f"values {values}")
        if self.config.type == EXAMPLE_TYPE and len(pairs) == len(self.pipeline.pairs()):
            report.check("virdim spectrum over A3 is {0, 1, 2}", values == [0, 1, 2], f"values {values}")

    # -- structural suites -----------------------------------------------------

    def _suite_duality(self, report: SuiteReport) -> None:
        pi = self.pipeline.pi
        w0 = longest_element(self.pipeline.dynkin)
        for v, w in self._pairs():
            cat = self._cat(v, w)
            p = cat.generator
            dual = duality_Phi(pi, p)
            partner = self._cat(w0.inverse() * w, w0 * v).generator
            report.check(f"add Φ(P_vw) = add P_(w0^-1 w, w0 v) {self._label(v, w)}",
                         same_additive_closure(dual, partner, self.rng), f"dims {dual.dim}, {partner.dim}")
            twice = duality_Phi(pi, dual)
            verdict = is_isomorphic(twice, p, self.config.iso_attempts, self.rng)
            report.check(f"Φ² ≅ id on P_vw {self._label(v, w)}", verdict is IsoVerdict.ISOMORPHIC, verdict.value)

    def _suite_u2_counterexample(self, report: SuiteReport) -> None:
        result = commutativity_counterexample(self.pipeline.field, self.rng)
        report.check("torsion classes over k(1 -> 2)", len(result.torsion_classes) == 5,
                     f"{result.torsion_classes}")
        report.check("f t != t f for some pair", result.found, f"{len(result.failures)} failures")
        expected = any(
            f.free_class == ("S1", "P1") and f.torsion_class == ("S2",) and f.module == "P1"
            for f in result.failures
        )
        report.check("fails for T_v = Fac(P1), T_w = add(S2), M = P1", expected)

    def _suite_birs(self, report: SuiteReport) -> None:
        dynkin = self.pipeline.dynkin
        e = identity(dynkin)
        w0 = longest_element(dynkin)
        for w in self.pipeline.elements:
            if w == e:
                continue
            cat = self._cat(w, w)
            lam = fingerprint(cat.lambda_w())
            inv = w.inverse()
            variants = {
                "Π_{w^-1}^op": lambda: transpose_fingerprint(fingerprint(self._cat(e, inv).pi_w())),
                "Π_{w^-1}": lambda: fingerprint(self._cat(e, inv).pi_w()),
                "Π^{w0 w^-1}": lambda: fingerprint(self._cat(w0 * inv, w0).pi_upper_v()),
            }
            matches = []
            for name, build in variants.items():
                try:
                    if build() == lam:
                        matches.append(name)
                except FrobCatError as err:
                    logger.debug(f"BIRS variant {name} for [{word_label(w)}] unavailable: {err}")
            report.check(f"Λ_w fingerprint matches [{word_label(w)}]", bool(matches), ", ".join(matches))

    def _suite_torsion(self, report: SuiteReport) -> None:
        pi = self.pipeline.pi
        rng = self.rng
        dynkin = self.pipeline.dynkin
        elements = self.pipeline.elements
        modules = [random_module(pi, rng) for _ in range(max(self.config.samples, TORSION_MODULES))]
        for w in elements:
            label = word_label(w)
            data = torsion_ideal(pi, w, verify=False)
            other = alternative_reduced_word(w)
            if other is not None:
                report.check(f"I_w independent of reduced word [{label}]",
                             ideal_along_word(pi, other) == data.ideal, f"[{label}] vs [{format_word(other)}]")
            problems = torsion_pair_violations(pi, w, modules)
            report.check(f"torsion pair axioms [{label}]", not problems, "; ".join(problems[:3]), self.config.seed)
            outside = [k for k, m in enumerate(modules)
                       if not torsion_apply(pi, w, m).subspace.contains_subspace(ideal_action_subspace(data, m))]
            report.check(f"I_w·M ⊆ t(M) [{label}]", not outside, f"modules {outside[:5]}", self.config.seed)
            if w.length <= 1:
                report.check(f"I_w idempotent [{label}]", data.is_idempotent())
        pairs = [(u, v) for u in elements for v in elements]
        if len(pairs) > EXHAUSTIVE_PAIR_LIMIT:
            pairs = [pairs[i] for i in sorted(rng.choice(len(pairs), size=self.config.samples, replace=False))]
        for u, v in pairs:
            product = ideal_product(torsion_ideal(pi, u).ideal, torsion_ideal(pi, v).ideal)
            star = demazure_product(u, v)
            report.check(f"I_u I_v = I_(u⋆v) [{word_label(u)}] [{word_label(v)}]",
                         product == torsion_ideal(pi, star).ideal)
        for i in range(1, dynkin.rank + 1):
            report.check(f"I_s{i} has codimension 1", pi.dim - simple_torsion_ideal(pi, i).dim == 1)
        if not self.pipeline.field.is_rational:
            self._compare_over_rationals(report, elements)

    def _compare_over_rationals(self, report: SuiteReport, elements: List[WeylElement]) -> None:
        """Dimensions over F_p against ℚ; a mismatch is reported, never failed."""
        rational = preprojective(self.pipeline.dynkin, FieldSpec(0), self.config.degree_cap)
        pi = self.pipeline.pi
        mismatches = [f"Π {pi.dim} vs {rational.dim}"] if pi.dim != rational.dim else []
        for w in elements[: max(self.config.samples, 1)]:
            ours, theirs = torsion_ideal(pi, w).ideal.dim, torsion_ideal(rational, w).ideal.dim
            if ours != theirs:
                mismatches.append(f"I_[{word_label(w)}] {ours} vs {theirs}")
        if mismatches:
            logger.warning(f"Dimensions over {pi.field.label} differ from ℚ: {mismatches}")
        report.check(
            f"dimensions over {self.pipeline.field.label} agree with ℚ",
            True,
            "; ".join(mismatches) if mismatches else "no discrepancy",
        )

    def _suite_convention(self, report: SuiteReport) -> None:
        """Which index conventions reproduce (P) <=> C_v ⊆ C_w and the example observables."""
        pi = self.pipeline.pi
        pairs = self._pairs()
        example = self._example_pair()
        for name in convention_names():
            agree = all(condition_P(v, w) == class_containment(pi, v, w, name) for v, w in pairs)
            details = [f"(P) <=> containment: {agree}"]
            matches = agree
            if example is not None:
                cat = FrobeniusCategory(pi, *example, convention=name, rng=self.rng)
                summands = summand_count(cat.generator, cat.rng) if cat.generator.dim else 0
                phi2 = cat.phi2()
                observed = summands == 4 and phi2.injective and phi2.cokernel_dim == 1
                details.append(f"example: {summands} summands, phi2 coker {phi2.cokernel_dim}")
                matches = matches and observed
            if name == self.config.convention:
                report.check(f"convention {name} (selected)", matches, "; ".join(details))
            else:
                report.check(f"convention {name}", True, ("matches; " if matches else "differs; ") + "; ".join(details))

    def _suite_example_leclerc(self, report: SuiteReport) -> None:
        example = self._example_pair()
        if example is None:
            raise SuiteError(f"example-leclerc needs type {EXAMPLE_TYPE}, got {self.config.type}")
        cat = self._cat(*example)
        cutoff = self.config.cutoff
        summands = summand_count(cat.generator, cat.rng)
        report.check("P_vw has 4 indecomposable summands", summands == 4, f"{summands}")
        phi2 = cat.phi2()
        report.check("phi2 injective", phi2.injective)
        report.check("phi2 cokernel of dimension 1", phi2.cokernel_dim == 1, f"{phi2.cokernel_dim}")
        algebra = cat.pi_vw()
        g = global_dimension(algebra, cutoff)
        d = virtual_dimension(algebra, cutoff)
        report.check("gldim Π_vw = 2", g == 2, format_dimension(g, cutoff))
        report.check("virdim Π_vw = 2", d == 2, f"{d}")
        a2 = preprojective(DynkinType("A", 2), self.pipeline.field, self.config.degree_cap)
        auslander = fingerprint(preprojective_auslander_algebra(a2, self.rng))
        ours = fingerprint(algebra)
        report.check(
            "Π_vw fingerprint matches the Auslander algebra of Π(A2)",
            ours in (auslander, transpose_fingerprint(auslander)),
            f"{ours} vs {auslander}",
        )
