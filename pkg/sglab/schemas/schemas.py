import json
from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Any, Literal, get_args

from pydantic import BaseModel, Field, field_serializer, field_validator, model_validator

from sglab.config import settings

UTC = timezone.utc

ClaimId = Literal[
    "thm-1.1",
    "thm-1.2",
    "thm-1.3-construction",
    "thm-1.3-search",
    "thm-1.4-construction",
    "lem-2.3",
    "lem-2.4",
    "lem-2.5",
    "lem-3.4",
    "bounds",
]

CLAIM_IDS: tuple[str, ...] = get_args(ClaimId)

# ==================== Espectro ====================


class Spectrum(BaseModel):
    """Autovalores de A(Ġ) em ordem decrescente e o raio espectral ρ = max(λ1, -λn)."""

    eigenvalues: list[float] = Field(..., min_length=1, description="λ1 >= ... >= λn")
    rho: float = Field(..., ge=0, description="Raio espectral")
    tolerance: float = Field(..., ge=0, description="Norma fora da diagonal na parada")
    sweeps: int = Field(0, ge=0, description="Varreduras de Jacobi executadas")

    @model_validator(mode="after")
    def validar_ordem(self):
        vals = self.eigenvalues
        if any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
            raise ValueError("eigenvalues must be sorted in descending order")
        if abs(self.rho - max(vals[0], -vals[-1])) > 1e-12 * max(1.0, self.rho):
            raise ValueError("rho must equal max(lambda_1, -lambda_n)")
        return self

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    @property
    def lambda_1(self) -> float:
        return self.eigenvalues[0]

    @property
    def lambda_n(self) -> float:
        return self.eigenvalues[-1]


class CharPoly(BaseModel):
    """
    Coeficientes inteiros exatos c0..cn de det(xI - A), do termo constante ao líder.
    No JSON cada coeficiente vira string decimal.
    """

    coeffs: list[int] = Field(..., min_length=1)

    @field_validator("coeffs")
    @classmethod
    def validar_monico(cls, v: list[int]) -> list[int]:
        if v[-1] != 1:
            raise ValueError("characteristic polynomial must be monic")
        return v

    @field_serializer("coeffs")
    def serializar_coeffs(self, coeffs: list[int]) -> list[str]:
        return [str(c) for c in coeffs]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> int:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def evaluate(self, x: float | int | Fraction) -> Fraction:
        """Valor exato em x (um float é convertido sem arredondamento)."""
        xq = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * xq + c
        return acc

    def __str__(self) -> str:
        termos = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sinal = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                corpo = str(mag)
            else:
                base = "x" if power == 1 else f"x^{power}"
                corpo = base if mag == 1 else f"{mag}{base}"
            termos.append((sinal, corpo))
        if not termos:
            return "0"
        primeiro_sinal, primeiro = termos[0]
        texto = ("-" if primeiro_sinal == "-" else "") + primeiro
        for sinal, corpo in termos[1:]:
            texto += f" {sinal} {corpo}"
        return texto


class BoundReport(BaseModel):
    """
    Resultado de uma cota espectral ou extremal.

    slack é a folga no sentido da desigualdade (positiva quando vale):
    cota - quantidade para cotas superiores, quantidade - cota para a garantia de Turán.
    """

    name: Literal["hong", "stanic", "wyq", "wyq_unsigned", "turan"]
    value: float = Field(..., description="Valor da cota")
    quantity: float = Field(..., description="Quantidade cotada (ρ, λ1 ou ω)")
    slack: float
    satisfied: bool
    details: dict[str, float | int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def validar_folga(self):
        if self.satisfied != (self.slack >= -settings.BOUND_TOLERANCE):
            raise ValueError("satisfied must agree with slack >= -tolerance")
        return self


# ==================== Relatórios ====================


class Witness(BaseModel):
    """Testemunha de um relatório: grafo em .sg, ciclo canônico ou valor avulso."""

    kind: Literal["graph", "cycle", "value"]
    label: str = ""
    sg: str | None = None
    cycle: list[int] | None = None
    data: dict[str, Any] = Field(default_factory=dict)


class Counters(BaseModel):
    classes: int = Field(0, ge=0, description="Classes de switching examinadas")
    graphs: int = Field(0, ge=0, description="Grafos subjacentes examinados")
    pruned: int = Field(0, ge=0, description="Grafos descartados por poda")
    seconds: float = Field(0.0, ge=0)


class TheoremReport(BaseModel):
    """Veredito legível por máquina de uma execução de verificação."""

    claim: ClaimId
    params: dict[str, Any] = Field(default_factory=dict)
    status: Literal["pass", "fail", "infeasible"]
    expected: dict[str, Any] = Field(default_factory=dict)
    observed: dict[str, Any] = Field(default_factory=dict)
    witnesses: list[Witness] = Field(default_factory=list)
    counters: Counters = Field(default_factory=Counters)
    notes: list[str] = Field(default_factory=list)
    timestamp: str | None = None

    @model_validator(mode="after")
    def validar_testemunhas(self):
        if self.status == "fail" and not self.witnesses:
            raise ValueError("a failing report must carry at least one witness")
        return self

    def stamp(self) -> "TheoremReport":
        return self.model_copy(update={"timestamp": datetime.now(UTC).isoformat()})

    def to_json(self, timestamp: bool = True) -> str:
        """
        JSON com chaves ordenadas. Sem timestamp, o horário e os segundos
        saem do relatório, que fica idêntico byte a byte entre execuções.
        """
        data = self.model_dump(mode="json")
        if not timestamp:
            data.pop("timestamp", None)
            data["counters"].pop("seconds", None)
        return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


# ==================== Linha de comando ====================


class RunConfig(BaseModel):
    """Configuração validada de uma execução da CLI."""

    verb: Literal["construct", "check", "spectrum", "bounds", "frustration", "verify", "search"]
    input: Path | None = None
    output: Path | None = None
    graphs: Path | None = None
    family: Literal["gst", "c3k", "complete", "hna"] | None = None
    claim: ClaimId | None = None
    n: int | None = Field(None, ge=1)
    k: int | None = Field(None, ge=1)
    ell: int | None = Field(None, ge=3)
    s: int | None = Field(None, ge=1)
    t: int | None = Field(None, ge=1)
    a: int | None = Field(None, ge=2)
    variant: Literal[1, 2, 3] = 1
    attach: list[int] | None = None
    nmax: int | None = Field(None, ge=1)
    trials: int | None = Field(None, ge=1)
    seed: int = Field(0, ge=0)
    budget: int | None = Field(None, ge=0)
    restarts: int | None = Field(None, ge=1)
    initial: Literal["random", "extremal"] = "random"
    jobs: int = Field(default_factory=lambda: settings.JOBS, ge=1)
    format: Literal["text", "json"] = "text"
    witness: bool = False
    timestamp: bool = True
    quiet: bool = False

    @model_validator(mode="after")
    def validar_parametros_do_verbo(self):
        faltando: list[str] = []
        if self.verb == "construct" and self.family is None:
            faltando.append("--family")
        if self.verb == "check":
            if self.input is None:
                faltando.append("--in")
            if self.ell is None:
                faltando.append("--ell")
        if self.verb in ("spectrum", "bounds", "frustration") and self.input is None:
            faltando.append("--in")
        if self.verb == "verify" and self.claim is None:
            faltando.append("--claim")
        if self.verb == "search":
            if self.n is None:
                faltando.append("--n")
            if self.k is None:
                faltando.append("--k")
        if faltando:
            raise ValueError(f"'{self.verb}' requires {', '.join(faltando)}")
        return self
