#!/usr/bin/env python3

# Core
from dataclasses import dataclass
from pathlib import Path
from typing import Optional
import logging
# Project
from charpoly import ConsistencyError, IntPoly, char_poly, poincare, \
    reduced_char, reduced_poincare, reduced_poincare_from_char, split_over_Z
from classes import ChowClass, betti, csm_arrangement, csm_complement, \
    csm_complement_from_poincare, effectivity_from_chibar, effectivity_poly, \
    euler_characteristics, free_chern_identity, grothendieck_class, \
    hodge_deligne, is_effective, stable_birational_constant
from ffcount import BadPrimeError, verify_point_count
from lattice import Arrangement, center, lattice_of
from models import ArrangementInfo, ChowClassModel, ExponentSplit, \
    LatticeSummary, LevelSummary, PointCountCheck, PolyModel, Report
from segre import SegreError, betti_from_sigma, segre_pushforward, \
    sigma_from_pi

logger = logging.getLogger(__name__)

TEMPLATE_PATH = Path(__file__).parent / 'data' / 'report_templates' / 'report.txt'

# =========================================================================== #

@dataclass(frozen=True)
class ReportOptions:
    verify_primes: tuple = ()
    budget: Optional[int] = None
    backend: str = 'local'

# =========================================================================== #

def _poly(poly: IntPoly, variable: str = 't') -> PolyModel:
    return PolyModel(variable=variable, coeffs=list(poly.coeffs) or [0],
            text=poly.format(variable))

def _chow(chow: ChowClass) -> ChowClassModel:
    return ChowClassModel(coeffs=list(chow.coeffs), text=str(chow))

def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ConsistencyError(message)

# --------------------------------------------------------------------------- #

def run_report(a: Arrangement, options: Optional[ReportOptions] = None) -> Report:
    """
    Run the full pipeline (lattice, polynomials, classes, Segre data and the
    optional point counts), checking the identities that tie the stages
    together.

    Args:
        a (Arrangement): The arrangement.
        options (ReportOptions): Primes to verify, budget and count backend.

    Returns:
        Report: Every computed invariant.

    Raises:
        ConsistencyError: If any cross-stage identity fails.
        CountBudgetError: If a requested point count exceeds the budget.
    """
    options = options or ReportOptions()
    n, d = a.n, a.d

    lattice = lattice_of(a)
    levels = lattice.levels()

    logger.info("Computing polynomials..")
    chi = char_poly(lattice)
    chibar = reduced_char(chi)
    pi = poincare(chi)
    pibar = reduced_poincare(pi)
    _require(pibar == reduced_poincare_from_char(chibar),
            f"Reduced Poincaré polynomial {pibar} is not the reversal of {chibar}")

    logger.info("Computing characteristic classes..")
    betti_vector = betti(pibar, n)
    complement_class = csm_complement(chibar, n)
    _require(complement_class == csm_complement_from_poincare(pibar, n),
            "CSM class of the complement differs between chibar and pibar")
    arrangement_class = csm_arrangement(lattice, chibar)
    effectivity = effectivity_poly(lattice)
    _require(effectivity == effectivity_from_chibar(chibar, n),
            "Effectivity polynomial differs between the flats and chibar")
    euler_complement, euler_arrangement = euler_characteristics(chibar, n)
    _require(complement_class.degree_zero == euler_complement,
            "Degree-zero CSM coefficient is not the Euler characteristic")

    logger.info("Computing Segre data..")
    try:
        sigma = sigma_from_pi(pibar, d, n)
        sigma_betti = betti_from_sigma(sigma, d)
    except SegreError as err:
        raise ConsistencyError(f"Segre transform failed on lattice data: " \
                f"{err}") from err
    _require(sigma_betti == betti_vector,
            "Betti numbers from the Segre data differ from pibar")

    split = split_over_Z(chibar, d)
    chern_ok = None
    if split.splits:
        chern_ok = free_chern_identity(chibar, n, split.roots)
        _require(chern_ok, f"Chern product of the roots {split.roots} does " \
                "not match the CSM class of the complement")

    point_counts = []
    for p in options.verify_primes:
        try:
            point_counts.append(verify_point_count(a, p, lattice,
                    options.budget, options.backend))
        except BadPrimeError as err:
            logger.warning(f"Skipping point count: {err}")
            point_counts.append(PointCountCheck(p=p, status='bad_prime'))

    center_dim = center(a).dim
    groth = grothendieck_class(chibar)

    return Report(
        arrangement=ArrangementInfo(n=n, d=d, essential=center_dim == 0,
            center_dim=center_dim, forms=a.forms.to_strings()),
        lattice=LatticeSummary(flat_count=len(lattice.flats), levels=[
            LevelSummary(codim=codim, flat_count=len(flats),
                mobius=sorted(flat.mobius for flat in flats),
                mobius_sum=sum(flat.mobius for flat in flats))
            for codim, flats in levels.items()]),
        chi=_poly(chi),
        chi_reduced=_poly(chibar),
        poincare=_poly(pi),
        poincare_reduced=_poly(pibar),
        grothendieck_class=_poly(groth.poly, 'L'),
        grothendieck_class_affine=_poly(groth.affine, 'L'),
        hodge_deligne=_poly(hodge_deligne(chibar), 'uv'),
        stable_birational_constant=stable_birational_constant(chibar,
            betti_vector),
        euler_characteristic_complement=euler_complement,
        euler_characteristic_arrangement=euler_arrangement,
        csm_complement=_chow(complement_class),
        csm_arrangement=_chow(arrangement_class),
        effectivity_polynomial=_poly(effectivity),
        effective=is_effective(effectivity),
        betti=list(betti_vector.ranks),
        betti_affine=list(betti_vector.affine),
        sigma=list(sigma.sigma),
        segre_pushforward=_chow(segre_pushforward(sigma)),
        exponent_split=ExponentSplit(splits=split.splits,
            roots=list(split.roots) if split.splits else None,
            exponents=list(split.exponents) if split.splits else None,
            exponent_sum_matches=split.exponent_sum_ok,
            chern_identity_holds=chern_ok),
        point_counts=point_counts)

# =========================================================================== #

def render_json(report: Report) -> str:
    return report.model_dump_json(indent=2)

# --------------------------------------------------------------------------- #

def load_template(template_path, params=None) -> str:
    if params is None:
        params = {}

    with open(template_path, 'r') as file_handle:
        template = file_handle.read()
        for key, value in params.items():
            template = template.replace(f"{{{{%{key}%}}}}", str(value))
        return template

# --------------------------------------------------------------------------- #

def _join(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"

def _point_count_line(check) -> str:
    if check.status == 'bad_prime':
        return f"  p = {check.p:<4} bad prime"
    line = f"  p = {check.p:<4} {check.status}: projective " \
            f"{check.projective_count} vs chibar(p) = {check.chibar_value}, " \
            f"affine {check.affine_count} vs chi(p) = {check.chi_value}"
    if not check.affine_scaling_matches:
        line += ", affine count is not (p-1) x projective"
    return line

def render_text(report: Report) -> str:
    levels = "\n".join(
        f"  codim {level.codim:<3} {level.flat_count:>5} flats   " \
        f"mu sum {level.mobius_sum:>6}   mu {_join(level.mobius)}"
        for level in report.lattice.levels)

    split = report.exponent_split
    exponents = _join(split.exponents) if split.splits else \
            "chibar does not split over Z"

    if report.point_counts:
        point_counts = "\n".join(_point_count_line(check)
            for check in report.point_counts)
    else:
        point_counts = "  none requested"

    return load_template(TEMPLATE_PATH, {
        'd': report.arrangement.d,
        'n': report.arrangement.n,
        'essential': 'yes' if report.arrangement.essential else 'no',
        'center_dim': report.arrangement.center_dim,
        'flat_count': report.lattice.flat_count,
        'levels': levels,
        'chi': report.chi.text,
        'chi_reduced': report.chi_reduced.text,
        'poincare': report.poincare.text,
        'poincare_reduced': report.poincare_reduced.text,
        'exponents': exponents,
        'grothendieck': report.grothendieck_class.text,
        'grothendieck_affine': report.grothendieck_class_affine.text,
        'hodge_deligne': report.hodge_deligne.text,
        'stable_birational': report.stable_birational_constant,
        'csm_complement': report.csm_complement.text,
        'csm_arrangement': report.csm_arrangement.text,
        'euler_complement': report.euler_characteristic_complement,
        'euler_arrangement': report.euler_characteristic_arrangement,
        'effectivity': report.effectivity_polynomial.text,
        'effective': 'yes' if report.effective else 'no',
        'betti': _join(report.betti),
        'betti_affine': _join(report.betti_affine),
        'sigma': _join(report.sigma),
        'segre': report.segre_pushforward.text,
        'point_counts': point_counts,
    })

# =========================================================================== #
