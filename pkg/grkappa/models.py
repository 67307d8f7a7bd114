"""Pydantic payloads for every JSON document grkappa reads or writes."""

from pydantic import BaseModel

from .core.cartan import DominantWeight, RootElement
from .core.crystal import CrystalGraph
from .core.decomp import DecompositionMatrix
from .core.fock import FockVector
from .core.laurent import LaurentPoly
from .core.multipartition import parse_multipartition
from .core.seminormal import KLRRep, sparse_entries
from .core.tableaux import QCharacter
from .core.verification import Violation

CACHE_VERSION = 1


def alpha_payload(alpha: RootElement) -> dict[str, int]:
    return {str(i): c for i, c in alpha.coeffs}


def alpha_from_payload(payload: dict[str, int]) -> RootElement:
    return RootElement.from_mapping({int(i): c for i, c in payload.items()})


class QCharacterTerm(BaseModel):
    seq: list[int]
    coeff: str


def qcharacter_payload(ch: QCharacter) -> list[QCharacterTerm]:
    return [QCharacterTerm(seq=list(seq), coeff=str(poly)) for seq, poly in ch.items()]


class FockTerm(BaseModel):
    mp: str
    coeff: str


def fock_payload(v: FockVector) -> list[FockTerm]:
    return [FockTerm(mp=str(mu), coeff=str(poly)) for mu, poly in v.items()]


class MatrixPayload(BaseModel):
    """A decomposition matrix with entries as Laurent polynomial text."""

    e: int
    kappa: list[int]
    alpha: dict[str, int]
    rows: list[str]
    cols: list[str]
    entries: list[tuple[str, str, str]]

    @classmethod
    def from_matrix(cls, matrix: DecompositionMatrix) -> "MatrixPayload":
        return cls(
            e=matrix.weight.e,
            kappa=list(matrix.weight.kappa),
            alpha=alpha_payload(matrix.alpha),
            rows=[str(mu) for mu in matrix.rows],
            cols=[str(nu) for nu in matrix.cols],
            entries=[
                (str(mu), str(nu), str(matrix.entry(mu, nu)))
                for mu in matrix.rows
                for nu in matrix.cols
                if matrix.entry(mu, nu)
            ],
        )

    def to_matrix(self, method: str = "") -> DecompositionMatrix:
        weight = DominantWeight(tuple(self.kappa), self.e)
        return DecompositionMatrix(
            alpha=alpha_from_payload(self.alpha),
            weight=weight,
            rows=[parse_multipartition(text) for text in self.rows],
            cols=[parse_multipartition(text) for text in self.cols],
            entries={
                (parse_multipartition(mu), parse_multipartition(nu)): LaurentPoly.parse(value)
                for mu, nu, value in self.entries
            },
            method=method,
        )


class SpecializedMatrixPayload(BaseModel):
    e: int
    kappa: list[int]
    alpha: dict[str, int]
    rows: list[str]
    cols: list[str]
    values: list[list[int]]


class CacheRecord(BaseModel):
    version: int
    matrix: MatrixPayload


class IrreducibleCharacterPayload(BaseModel):
    label: str
    dimension: int
    character: list[QCharacterTerm]


class CrystalEdgePayload(BaseModel):
    source: str
    target: str
    residue: int


class CrystalGraphPayload(BaseModel):
    e: int
    kappa: list[int]
    vertices: list[str]
    edges: list[CrystalEdgePayload]

    @classmethod
    def from_graph(
        cls,
        graph: CrystalGraph,
        weight: DominantWeight,
    ) -> "CrystalGraphPayload":
        return cls(
            e=weight.e,
            kappa=list(weight.kappa),
            vertices=[str(mu) for mu in graph.vertices],
            edges=[
                CrystalEdgePayload(source=str(source), target=str(target), residue=i)
                for source, target, i in graph.edges
            ],
        )


class KLRBasisEntry(BaseModel):
    label: str
    seq: list[int]
    degree: int


class KLRRepPayload(BaseModel):
    d: int
    basis: list[KLRBasisEntry]
    matrices: dict[str, list[tuple[int, int, str]]]

    @classmethod
    def from_rep(cls, rep: KLRRep) -> "KLRRepPayload":
        return cls(
            d=rep.d,
            basis=[
                KLRBasisEntry(label=label, seq=list(seq), degree=degree)
                for label, seq, degree in zip(rep.labels, rep.sequences, rep.degrees)
            ],
            matrices={name: sparse_entries(matrix) for name, matrix in rep.matrices().items()},
        )


class ViolationPayload(BaseModel):
    relation: str
    location: str
    detail: str

    @classmethod
    def from_violation(cls, violation: Violation) -> "ViolationPayload":
        return cls(
            relation=violation.relation,
            location=violation.location,
            detail=violation.detail,
        )


class VerificationReport(BaseModel):
    passed: bool
    checked: str
    violations: list[ViolationPayload]


class FockActionPayload(BaseModel):
    generator: str
    residue: int
    vector: list[FockTerm]


class FockVerificationReport(VerificationReport):
    """The relation report, plus the Chevalley generators applied to one M_mu."""

    vector: str | None = None
    actions: list[FockActionPayload] = []


class BlockPayload(BaseModel):
    alpha: dict[str, int]
    defect: int
    multipartitions: list[str]
    restricted: list[str]
