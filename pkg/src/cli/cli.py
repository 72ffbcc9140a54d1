"""
Interface en ligne de commande.

Chaque commande écrit un document JSON (clés triées) sur la sortie standard
ou dans --out; les logs partent sur stderr.
"""

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Tuple

from ..arith.rational import QValue, parse_rational
from ..core import (
    ConfigurationError,
    QYLError,
    ValidationError,
    get_logger,
    settings,
    setup_logging_from_settings,
)
from ..gt.patterns import HighestWeight
from ..pipeline import Command, Pipeline, RunConfig, Suite

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _int_list(text: str, field: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError as e:
        raise ValidationError(f"Liste d'entiers invalide pour --{field}: {text!r}", field=field, original_error=e)


def _weight(text: Optional[str], field: str, n: Optional[int]) -> Optional[HighestWeight]:
    if text is None:
        return None
    entries = _int_list(text, field)
    if n is not None and len(entries) != n:
        raise ValidationError(f"--{field} doit avoir {n} composantes (reçu {len(entries)})", field=field)
    try:
        return HighestWeight(entries)
    except QYLError as e:
        raise ValidationError(f"--{field}: {e.message}", field=field, original_error=e)


def _rational(text: Optional[str], field: str) -> Fraction:
    if text is None:
        return Fraction(1)
    try:
        value = parse_rational(text)
    except (QYLError, ValueError, ZeroDivisionError) as e:
        raise ValidationError(f"Rationnel invalide pour --{field}: {text!r}", field=field, original_error=e)
    if value == 0:
        raise ValidationError(f"--{field} doit être non nul", field=field)
    return value


def _q(text: Optional[str]) -> QValue:
    raw = text if text is not None else settings.q
    try:
        return QValue.parse(raw)
    except (QYLError, ValueError, ZeroDivisionError) as e:
        raise ValidationError(f"q invalide: {raw!r}", field="q", original_error=e)


def build_parser() -> argparse.ArgumentParser:
    """Parseur des sous-commandes check, oracle, sweep, verify et export."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", help="Paramètre q au format p/q (défaut: QYL_Q ou 3/2)")
    common.add_argument("--n", type=int, help="Rang n de gl_n")
    common.add_argument("--lambda", dest="lam", help="Plus haut poids, ex: 1,0")
    common.add_argument("--mu", help="Second plus haut poids, ex: 0,-1")
    common.add_argument("--a", help="Paramètre d'évaluation du premier facteur")
    common.add_argument("--b", help="Paramètre d'évaluation du second facteur")
    common.add_argument("--h", help="Facteur h du premier plus haut poids général")
    common.add_argument("--hp", help="Facteur h' du second plus haut poids général")
    common.add_argument("--eps", help="Signes ε du premier facteur, ex: 1,-1")
    common.add_argument("--epsp", help="Signes ε' du second facteur")
    common.add_argument("--out", type=Path, help="Fichier JSON de sortie (relatif à QYL_REPORTS_DIR)")
    common.add_argument("--seed", type=int, help="Graine du tirage (balayages)")
    common.add_argument("--debug", action="store_true", help="Contrôles croisés supplémentaires")

    parser = argparse.ArgumentParser(
        prog="qyl",
        description="Irréductibilité des produits tensoriels de modules d'évaluation de la q-Yangienne",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser(Command.CHECK.value, parents=[common], help="Verdict du critère combinatoire")
    sub.add_parser(Command.ORACLE.value, parents=[common], help="Verdict de l'oracle d'algèbre linéaire")

    sweep = sub.add_parser(Command.SWEEP.value, parents=[common], help="Balayage critère ⇔ oracle")
    sweep.add_argument("--width", type=int, default=4, help="Largeur de la boîte de poids")
    sweep.add_argument("--samples", type=int, help="Nombre de cas tirés (n >= 3 ou plusieurs facteurs)")
    sweep.add_argument("--max-dim", type=int, default=1000, help="Dimension maximale du produit")
    sweep.add_argument("--factors", type=int, default=2, help="Nombre de facteurs tensoriels")
    sweep.add_argument("--burnside", action="store_true", help="Ajouter le contrôle de Burnside")
    sweep.add_argument("--workers", type=int, help="Nombre de processus")

    verify = sub.add_parser(Command.VERIFY.value, parents=[common], help="Suites de vérification exacte")
    verify.add_argument("--suite", required=True, choices=[s.value for s in Suite])
    verify.add_argument("--max-instances", type=int, help="Plafond d'instances par famille d'identités")
    verify.add_argument("--all", dest="all_weights", action="store_true",
                        help="Tous les poids dominants de la boîte (paires réductibles pour theta)")
    verify.add_argument("--width", type=int, default=3, help="Largeur de la boîte de poids (--all)")
    verify.add_argument("--max-dim", type=int, default=200, help="Dimension maximale (--all)")

    sub.add_parser(Command.EXPORT.value, parents=[common], help="Export JSON des matrices")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Convertit les arguments en RunConfig validée."""
    command = Command(args.command)
    n = args.n
    if n is not None and n < 1:
        raise ValidationError("--n doit être >= 1", field="n")
    lam = _weight(args.lam, "lambda", n)
    mu = _weight(args.mu, "mu", n if n is not None else (lam.n if lam else None))
    config = RunConfig(
        command=command,
        q=_q(args.q),
        n=n if n is not None else (lam.n if lam else None),
        lam=lam,
        mu=mu,
        a=_rational(args.a, "a"),
        b=_rational(args.b, "b"),
        h=_rational(args.h, "h"),
        hp=_rational(args.hp, "hp"),
        eps=_int_list(args.eps, "eps") if args.eps else (),
        epsp=_int_list(args.epsp, "epsp") if args.epsp else (),
        seed=args.seed if args.seed is not None else settings.sweep_seed,
        out=args.out,
        debug=args.debug,
    )
    if command is Command.SWEEP:
        if args.factors < 2:
            raise ValidationError("--factors doit être >= 2", field="factors")
        config.width = args.width
        config.samples = args.samples if args.samples is not None else settings.sweep_samples
        config.max_dim = args.max_dim
        config.factors = args.factors
        config.burnside = args.burnside
    if command is Command.VERIFY:
        config.suite = Suite(args.suite)
        config.max_instances = args.max_instances
        if args.all_weights:
            if lam is not None or mu is not None:
                raise ValidationError("--all exclut --lambda et --mu", field="all")
            config.all_weights = True
            config.width = args.width
            config.max_dim = args.max_dim
    return config


def write_output(payload: dict, out: Optional[Path]) -> None:
    """JSON UTF-8 à clés triées, sur stdout ou dans un fichier."""
    text = json.dumps(payload, sort_keys=True, ensure_ascii=False)
    if out is None:
        sys.stdout.write(text + "\n")
        return
    path = out if out.is_absolute() else settings.reports_dir / out
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text + "\n", encoding="utf-8")
    logger.info(f"Rapport écrit dans {path}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Point d'entrée; retourne le code de sortie."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.debug:
            settings.debug = True
        if getattr(args, "workers", None) is not None:
            settings.max_workers = args.workers
        setup_logging_from_settings(settings)
        config = config_from_args(args)
    except (ValidationError, ConfigurationError) as e:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"qyl: {e}\n")
        return EXIT_USAGE

    start = time.perf_counter()
    try:
        payload, ok = Pipeline(config).run()
    except (ValidationError, ConfigurationError) as e:
        sys.stderr.write(f"qyl: {e}\n")
        return EXIT_USAGE
    except QYLError as e:
        sys.stderr.write(f"qyl: {e}\n")
        return EXIT_FAILURE
    elapsed = time.perf_counter() - start

    write_output(payload, config.out)
    if config.command is Command.SWEEP:
        summary = payload["summary"]
        logger.info(f"Résumé: {summary['agree']}/{summary['total']} en accord ({elapsed:.1f}s)")
    else:
        logger.info(f"Terminé en {elapsed:.2f}s")
    return EXIT_OK if ok else EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
