"""Pydantic request/response models of the service API (shared with the CLI)."""
from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class GroupRequest(BaseModel):
    group: str = Field(description="dihedral:<m> | h3 | b3 | a:<n> | g:<m>,1,<n>")


class GroupInfoResponse(BaseModel):
    group: str
    order: int
    reflections: list[int]
    hyperplanes: int
    orbits: list[list[int]]
    refl_classes: list[list[int]]
    crossing_pairs: list[list[int]]
    r_sets: dict[str, list[int]]
    relation1prime_pairs: list[list[int]]


class AlgebraRequest(BaseModel):
    group: str
    products: Optional[bool] = None  # default: full table only when dim <= 150


class AlgebraResponse(BaseModel):
    group: str
    dim: int
    params: list[str]
    basis: list[dict]
    gens: dict[str, int]
    star: list[int]
    e_length_counts: dict[str, int]
    dimension_report: dict
    products: Optional[list] = None
    generator_columns: Optional[dict] = None


class RelationsRequest(BaseModel):
    group: Optional[str] = None
    kind: Optional[str] = None  # presentation kind instead of Definition-1.1 relations
    m: Optional[int] = None
    n: Optional[int] = None


class RelationsResponse(BaseModel):
    count: int
    vars: list[str]
    relations: list[dict]


class RepRequest(BaseModel):
    group: str
    alpha: Optional[int] = None  # for h3-rep: 0..3 induced, 4 for the class rep


class RepResponse(BaseModel):
    group: str
    dim: int
    params: list[str]
    generators: dict[str, list]
    e_matrices: dict[str, list]
    blocks: Optional[list] = None
    det: Optional[list] = None
    det_string: Optional[str] = None


class FlatnessRequest(BaseModel):
    group: str
    kind: str = "bgu"            # bmr | bgu
    rep: str = "lk"              # lk | regular-group | regular-table
    perturb: bool = False        # negative control
    jobs: int = 1


class FlatnessResponse(BaseModel):
    group: str
    kind: str
    rep: str
    edges_checked: int
    flat: bool
    invariant: bool
    violations: list[dict]
    invariance_violations: list[dict]


class CellularRequest(BaseModel):
    group: str
    corrupted: bool = False


class CellularResponse(BaseModel):
    group: str
    cells: dict[str, int]
    report: dict


class SemisimpleRequest(BaseModel):
    group: str
    tau: Optional[list[str]] = None
    mu: Optional[list[str]] = None
    prime: Optional[int] = None


class SemisimpleResponse(BaseModel):
    group: str
    dim: int
    radical: int
    rank: int
    primes_used: list[int]
    wedderburn: Optional[list[int]] = None
    criterion_nonzero: Optional[bool] = None


class CycloCompareRequest(BaseModel):
    m: int
    n: int


class CycloCompareResponse(BaseModel):
    m: int
    n: int
    phi: dict
    psi: dict
    labels_bijective: bool
    lemma_identities: list


class VerifyAllRequest(BaseModel):
    group: str
    jobs: int = 1
    seed: int = 0


class VerifyAllResponse(BaseModel):
    group: str
    checks: dict[str, dict]
    passed: bool
