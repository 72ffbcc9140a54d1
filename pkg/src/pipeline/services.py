"""
Services métier pour le pipeline (logique pure, sans I/O utilisateur).
"""

import random
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import replace
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from ..arith.rational import QValue, format_rational
from ..core import (
    CaseDataError,
    ErrorType,
    InvariantFailure,
    ProgressBar,
    QYLError,
    ValidationError,
    get_logger,
    settings,
)
from ..criterion import (
    GeneralParams,
    Verdict,
    check_general,
    check_pairwise,
    check_theorem,
    multi_factor_check,
    theta_cases,
)
from ..gln import build_rep, export_rep, verify_gln_relations
from ..gt.patterns import HighestWeight, dominant_weights, weyl_dimension
from ..linalg.matrix import format_vector
from ..linalg.reduction import rank_of_vectors
from ..oracle import burnside_check, oracle_irreducible, singular_contains, singular_space
from ..yangian import (
    MINOR_SUITE,
    RTT_SUITE,
    EvalModule,
    MinorIdentity,
    TensorModule,
    YangianModule,
    expected_leading_vector,
    leading_component,
    theta_vector,
    verify_gt_vectors,
    verify_minor_identities,
)

from .interfaces import IVerificationSuite
from .models import CheckReport, OracleReport, RunConfig, Suite, SuiteReport, SweepCase, SweepReport

logger = get_logger(__name__)


def eval_module(lam: HighestWeight, q: QValue, a: Fraction = Fraction(1)) -> EvalModule:
    """L_a(λ) construit sur la base de Gelfand-Tsetlin."""
    return EvalModule(build_rep(lam, q), a)


def tensor_module(weights: Sequence[HighestWeight], q: QValue,
                  params: Optional[Sequence[Fraction]] = None) -> TensorModule:
    """L_{a1}(λ^1) ⊗ ... ⊗ L_{ak}(λ^k)."""
    params = params or [Fraction(1)] * len(weights)
    return TensorModule([eval_module(lam, q, a) for lam, a in zip(weights, params)])


def _require(config: RunConfig, *names: str) -> None:
    for name in names:
        if getattr(config, name) is None:
            flag = {"lam": "lambda"}.get(name, name)
            raise ValidationError(f"--{flag} est requis pour cette commande", field=flag)


def _subject_module(config: RunConfig) -> YangianModule:
    if config.mu is None:
        return eval_module(config.lam, config.q)
    return tensor_module([config.lam, config.mu], config.q)


# ---------------------------------------------------------------------------
# Suites de vérification
# ---------------------------------------------------------------------------

class RelationsSuite(IVerificationSuite):
    """Relations de U_q(gl_n) sur L(λ), unicité du plus haut vecteur et valeur propre de qdet."""

    def run(self, config: RunConfig) -> SuiteReport:
        _require(config, "lam")
        rep = build_rep(config.lam, config.q)
        report = SuiteReport(Suite.RELATIONS, config.to_dict(), details={"dimension": rep.dim})
        report.absorb(verify_gln_relations(rep))
        return report.absorb(verify_minor_identities(EvalModule(rep, Fraction(1)), [MinorIdentity.QDET]))


class RttSuite(IVerificationSuite):
    """RTT trigonométrique, relation fusionnée et antisymétriseur."""

    def run(self, config: RunConfig) -> SuiteReport:
        _require(config, "lam")
        module = _subject_module(config)
        report = SuiteReport(Suite.RTT, config.to_dict(), details={"dimension": module.dim})
        return report.absorb(verify_minor_identities(module, RTT_SUITE, config.max_instances))


class MinorsSuite(IVerificationSuite):
    """Calcul des mineurs quantiques: relations, centralité, comatrice, coproduit."""

    def run(self, config: RunConfig) -> SuiteReport:
        _require(config, "lam")
        module = _subject_module(config)
        report = SuiteReport(Suite.MINORS, config.to_dict(), details={"dimension": module.dim})
        return report.absorb(verify_minor_identities(module, MINOR_SUITE, config.max_instances))


class GtSuite(IVerificationSuite):
    """Vecteurs ξ_Λ construits par les opérateurs τ."""

    def run(self, config: RunConfig) -> SuiteReport:
        _require(config, "lam")
        module = eval_module(config.lam, config.q)
        report = SuiteReport(Suite.GT, config.to_dict(), details={"dimension": module.dim})
        return report.absorb(verify_gt_vectors(module))


class ThetaSuite(IVerificationSuite):
    """θ non nul, singulier, indépendant de ξ ⊗ ξ' et de composante dominante ξ_Λ ⊗ ξ'."""

    def run(self, config: RunConfig) -> SuiteReport:
        _require(config, "lam", "mu")
        cases = theta_cases(config.lam, config.mu)
        if not cases:
            raise CaseDataError(
                "not a reducible configuration",
                details={"lambda": list(config.lam.entries), "mu": list(config.mu.entries)},
            )
        report = SuiteReport(Suite.THETA, config.to_dict())
        details = []
        for case in cases:
            tm = tensor_module([case.lam, case.mu], config.q)
            theta = theta_vector(tm, case)
            top = tm.top_vector()
            tag = case.to_dict()
            report.record("theta_nonzero", any(theta), **tag)
            report.record("theta_singular", singular_contains(tm, theta), **tag)
            report.record("theta_independent", rank_of_vectors([top, theta]) == 2, **tag)
            expected = expected_leading_vector(tm, case)
            lead = leading_component(tm, theta)
            report.record("theta_leading", any(expected) and rank_of_vectors([expected, lead]) == 1, **tag)
            details.append({
                **tag,
                "dimension": tm.dim,
                "singular_dim": len(singular_space(tm)),
                "theta": format_vector(theta),
            })
        report.details["cases"] = details
        return report


SUITES: Dict[Suite, IVerificationSuite] = {
    Suite.RELATIONS: RelationsSuite(),
    Suite.RTT: RttSuite(),
    Suite.MINORS: MinorsSuite(),
    Suite.GT: GtSuite(),
    Suite.THETA: ThetaSuite(),
}


class SuiteRangeService:
    """
    Exécute une suite sur tous les poids d'une boîte.

    Pour θ, les sujets sont les paires (λ, μ) réductibles du balayage à deux
    facteurs; pour les autres suites, les λ dominants avec λ_n = 0,
    λ_1 <= width et dim L(λ) <= max_dim.
    """

    def __init__(self, verbose: bool = True):
        self.verbose = verbose

    @staticmethod
    def subjects(config: RunConfig) -> List[Tuple[HighestWeight, Optional[HighestWeight]]]:
        n = config.n or 2
        if Suite(config.suite) is Suite.THETA:
            pairs = [(HighestWeight(lam), HighestWeight(mu))
                     for lam, mu in SweepService.two_factor_cases(n, config.width, config.max_dim)]
            return [(lam, mu) for lam, mu in pairs if theta_cases(lam, mu)]
        return [(lam, None) for lam in dominant_weights(n, 0, config.width)
                if lam[n - 1] == 0 and weyl_dimension(lam) <= config.max_dim]

    def run(self, config: RunConfig) -> SuiteReport:
        suite = Suite(config.suite)
        subjects = self.subjects(config)
        report = SuiteReport(suite, config.to_dict())
        cases = []
        bar = ProgressBar(len(subjects), prefix=f"Suite {suite.value}", enabled=self.verbose)
        logger.info(f"Suite {suite.value}: {len(subjects)} poids, n={config.n or 2}, largeur {config.width}")
        for lam, mu in subjects:
            part = SUITES[suite].run(replace(config, lam=lam, mu=mu, all_weights=False))
            tag = {"lambda": list(lam.entries)}
            if mu is not None:
                tag["mu"] = list(mu.entries)
            for name, count in part.checked.items():
                report.checked[name] = report.checked.get(name, 0) + count
            report.failures.extend({**tag, **failure} for failure in part.failures)
            cases.append({**tag, "ok": part.ok, "total": sum(part.checked.values())})
            bar.advance(part.ok)
        bar.finish()
        report.details["cases"] = cases
        return report


# ---------------------------------------------------------------------------
# Critère et oracle
# ---------------------------------------------------------------------------

def _general_params(config: RunConfig) -> Tuple[GeneralParams, GeneralParams]:
    return (
        GeneralParams(config.lam, h=config.h, eps=config.eps, a=config.a),
        GeneralParams(config.mu, h=config.hp, eps=config.epsp, a=config.b),
    )


class CheckService:
    """Critère combinatoire, après réduction des paramètres généraux."""

    def check(self, config: RunConfig) -> CheckReport:
        _require(config, "lam", "mu")
        p, p2 = _general_params(config)
        verdict, reduction, witness = check_general(p, p2, config.q)
        trivial = reduction.k == 0 and p.eps == p2.eps
        report = CheckReport(
            lam=config.lam,
            mu=config.mu,
            verdict=verdict,
            witness=witness,
            reason=reduction.reason,
            reduction=None if trivial else reduction.to_dict(),
        )
        if settings.debug and not reduction.is_decided:
            report.pairwise = check_pairwise(*reduction.pair)
        logger.info(f"check λ=({config.lam}) μ=({config.mu}): {verdict.value}")
        return report


class OracleService:
    """Oracle sur L_b(λ) ⊗ L_b'(μ), b = a·h^{-2}, confronté au critère."""

    def run(self, config: RunConfig) -> OracleReport:
        _require(config, "lam", "mu")
        p, p2 = _general_params(config)
        tm = tensor_module([config.lam, config.mu], config.q, [p.b, p2.b])
        verdict = oracle_irreducible(tm, with_burnside=True)
        criterion, _, _ = check_general(p, p2, config.q)
        logger.info(f"oracle λ=({config.lam}) μ=({config.mu}): irreducible={verdict.irreducible}")
        return OracleReport(
            lam=config.lam,
            mu=config.mu,
            dimension=tm.dim,
            oracle=verdict.to_dict(),
            criterion=criterion,
        )


# ---------------------------------------------------------------------------
# Balayages
# ---------------------------------------------------------------------------

def run_sweep_case(q_text: str, weights: Tuple[Tuple[int, ...], ...], burnside: bool, debug: bool) -> SweepCase:
    """
    Un cas de balayage; fonction de module pour les processus fils.

    Deux facteurs: critère, condition par paires, oracle. Davantage: propriété
    binaire contre oracle et Burnside.
    """
    settings.debug = debug
    q = QValue.parse(q_text)
    lams = [HighestWeight(w) for w in weights]
    dimension = 1
    for lam in lams:
        dimension *= weyl_dimension(lam)
    try:
        if len(lams) == 2:
            criterion = check_theorem(*lams)
            if check_theorem(lams[0].shifted(1), lams[1].shifted(1)) is not criterion:
                raise InvariantFailure("Critère non invariant par translation", details={"weights": weights})
            pairwise = check_pairwise(*lams)
        else:
            criterion = multi_factor_check([GeneralParams(lam) for lam in lams], q)
            pairwise = None
        tm = tensor_module(lams, q)
        verdict = oracle_irreducible(tm)
        use_burnside = burnside and tm.dim <= settings.burnside_bound
        return SweepCase(
            weights=weights,
            criterion=criterion,
            oracle=Verdict.from_bool(verdict.irreducible),
            pairwise=pairwise,
            dimension=tm.dim,
            singular_dim=verdict.singular_dim,
            cyclic_from_top=verdict.cyclic_from_top,
            burnside=burnside_check(tm) if use_burnside else None,
        )
    except QYLError as e:
        return SweepCase(weights=weights, criterion=Verdict.IRREDUCIBLE, oracle=None,
                         dimension=dimension, error=str(e))


class SweepService:
    """Balayage critère ⇔ oracle: exhaustif pour n = 2, échantillonné au-delà."""

    def __init__(self, verbose: bool = True):
        self.verbose = verbose

    @staticmethod
    def two_factor_cases(n: int, width: int, max_dim: int) -> List[Tuple[Tuple[int, ...], ...]]:
        """
        Paires (λ, μ) avec λ_n = 0, λ_1 − λ_n <= width, μ à entrées dans
        [−width, width] (et de largeur <= width pour n > 2),
        dim L(λ)·dim L(μ) <= max_dim.
        """
        lams = [lam for lam in dominant_weights(n, 0, width) if lam[n - 1] == 0]
        mus = dominant_weights(n, -width, width, max_width=None if n == 2 else width)
        out = []
        for lam, mu in product(lams, mus):
            if weyl_dimension(lam) * weyl_dimension(mu) <= max_dim:
                out.append((lam.entries, mu.entries))
        return out

    @staticmethod
    def multi_factor_cases(n: int, factors: int, width: int, max_dim: int) -> List[Tuple[Tuple[int, ...], ...]]:
        weights = dominant_weights(n, -width, width, max_width=width)
        out = []
        for combo in product(weights, repeat=factors):
            dim = 1
            for lam in combo:
                dim *= weyl_dimension(lam)
            if dim <= max_dim:
                out.append(tuple(lam.entries for lam in combo))
        return out

    def cases(self, config: RunConfig) -> List[Tuple[Tuple[int, ...], ...]]:
        """Cas du balayage; tirage reproductible par la graine hors du cas n = 2 exhaustif."""
        n = config.n or 2
        if config.factors == 2:
            candidates = self.two_factor_cases(n, config.width, config.max_dim)
            if n == 2:
                return candidates
        else:
            candidates = self.multi_factor_cases(n, config.factors, config.width, config.max_dim)
        rng = random.Random(config.seed)
        return sorted(rng.sample(candidates, min(config.samples, len(candidates))))

    def run(self, config: RunConfig) -> SweepReport:
        n = config.n or 2
        cases = self.cases(config)
        report = SweepReport(q=config.q, n=n, factors=config.factors,
                             seed=None if (n == 2 and config.factors == 2) else config.seed)
        if not cases:
            logger.info("Balayage vide")
            return report

        q_text = format_rational(config.q.value)
        debug = settings.debug
        workers = settings.max_workers
        bar = ProgressBar(len(cases), prefix="Balayage", enabled=self.verbose)
        logger.info(f"Balayage: {len(cases)} cas, n={n}, {config.factors} facteurs, workers={workers or 1}")

        if not workers or workers == 1:
            for weights in cases:
                case = run_sweep_case(q_text, weights, config.burnside, debug)
                report.cases.append(case)
                bar.advance(case.agree)
        else:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                future_to_case = {
                    executor.submit(run_sweep_case, q_text, weights, config.burnside, debug): weights
                    for weights in cases
                }
                for future in as_completed(future_to_case):
                    weights = future_to_case[future]
                    try:
                        case = future.result()
                    except Exception as e:
                        raise QYLError(
                            ErrorType.ORACLE,
                            f"Échec du cas {weights}: {e}",
                            original_error=e,
                        )
                    report.cases.append(case)
                    bar.advance(case.agree)
        bar.finish()

        report.cases.sort(key=lambda c: c.key)
        disagreements = [c for c in report.cases if not c.agree]
        if disagreements:
            logger.warning(f"{len(disagreements)} désaccord(s) sur {len(report.cases)} cas")
        else:
            logger.info(f"Accord complet sur {len(report.cases)} cas")
        return report


class ExportService:
    """Export JSON des matrices de L(λ) et des opérateurs t_ij(u)."""

    def export(self, config: RunConfig) -> dict:
        _require(config, "lam")
        if config.mu is None:
            module = eval_module(config.lam, config.q, config.a)
            return {
                "representation": export_rep(module.rep),
                "module": module.export(),
            }
        p, p2 = _general_params(config)
        tm = tensor_module([config.lam, config.mu], config.q, [p.b, p2.b])
        return {
            "lambda": list(config.lam.entries),
            "mu": list(config.mu.entries),
            "module": tm.export(),
        }
