#!/usr/bin/env python3

# Core
from typing import Annotated, List, Literal, Optional
# Third-party
from pydantic import BaseModel, ConfigDict, Field, PlainSerializer

# Integers serialize as decimal strings in JSON
BigInt = Annotated[int, PlainSerializer(lambda v: str(v), return_type=str,
        when_used='json')]

# --------------------------------------------------------------------------- #

class ArrangementDocument(BaseModel):
    """
    Input document: {"n": 2, "forms": [["1", "0", "0"], ...]}
    """
    model_config = ConfigDict(extra='forbid')

    n: int = Field(ge=0)
    forms: List[List[str]] = Field(min_length=1)

# --------------------------------------------------------------------------- #

class PolyModel(BaseModel):
    variable: str
    coeffs: List[BigInt]
    text: str

class ChowClassModel(BaseModel):
    basis: Literal['P^k'] = 'P^k'
    coeffs: List[BigInt]
    text: str

# --------------------------------------------------------------------------- #

class ArrangementInfo(BaseModel):
    n: BigInt
    d: BigInt
    essential: bool
    center_dim: BigInt
    forms: List[List[str]]

class LevelSummary(BaseModel):
    codim: BigInt
    flat_count: BigInt
    mobius: List[BigInt]
    mobius_sum: BigInt

class LatticeSummary(BaseModel):
    flat_count: BigInt
    levels: List[LevelSummary]

# --------------------------------------------------------------------------- #

class ExponentSplit(BaseModel):
    splits: bool
    roots: Optional[List[BigInt]] = None
    exponents: Optional[List[BigInt]] = None
    exponent_sum_matches: Optional[bool] = None
    chern_identity_holds: Optional[bool] = None

class PointCountCheck(BaseModel):
    p: BigInt
    status: Literal['pass', 'fail', 'bad_prime']
    chibar_value: Optional[BigInt] = None
    projective_count: Optional[BigInt] = None
    chi_value: Optional[BigInt] = None
    affine_count: Optional[BigInt] = None
    projective_matches: Optional[bool] = None
    affine_matches: Optional[bool] = None
    affine_scaling_matches: Optional[bool] = None

# --------------------------------------------------------------------------- #

class Report(BaseModel):
    arrangement: ArrangementInfo
    lattice: LatticeSummary
    chi: PolyModel
    chi_reduced: PolyModel
    poincare: PolyModel
    poincare_reduced: PolyModel
    grothendieck_class: PolyModel
    grothendieck_class_affine: PolyModel
    hodge_deligne: PolyModel
    stable_birational_constant: BigInt
    euler_characteristic_complement: BigInt
    euler_characteristic_arrangement: BigInt
    csm_complement: ChowClassModel
    csm_arrangement: ChowClassModel
    effectivity_polynomial: PolyModel
    effective: bool
    betti: List[BigInt]
    betti_affine: List[BigInt]
    sigma: List[BigInt]
    segre_pushforward: ChowClassModel
    exponent_split: ExponentSplit
    point_counts: List[PointCountCheck] = []

    @property
    def verification_failed(self) -> bool:
        return any(check.status != 'pass' for check in self.point_counts)

# --------------------------------------------------------------------------- #
