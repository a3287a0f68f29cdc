import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from pydantic import BaseModel

from ..config import FqForgeConfig, VerifySettings
from ..errors import ArityError, FieldMismatchError, FqForgeError, ProblemFileError
from ..instruction import (
    ProblemFile,
    load_pointset_file,
    load_problem_file,
    parse_field_descriptor,
    parse_subset,
)
from ..instruction.problem_file import FULL
from ..validation import VerificationReport, summarize, verify_all
from ..validation.verifiers import (
    CORRESPONDENCE,
    NULLSTELLENSATZ,
    PRODUCT_SUM,
    QUOTIENT,
    RABINOWITSCH,
    RADICAL,
    WEAK_NULLSTELLENSATZ,
    ZERO_FUNCTION,
)
from .field import FieldSpec
from .ideal import Ideal, bezout_witness, rabinowitsch_certificate, rabinowitsch_lift, vanishing_ideal
from .ring import PointSet, RingElement, embed, ideal_of_pointset, one

# verify 子命令名到命题名的映射
VERIFY_TARGETS = {
    "all": None,
    "correspondence": (CORRESPONDENCE,),
    "nullstellensatz": (NULLSTELLENSATZ,),
    "weak": (WEAK_NULLSTELLENSATZ,),
    "radical": (RADICAL,),
    "quotient": (QUOTIENT,),
    "identities": (PRODUCT_SUM,),
    "zero-function": (ZERO_FUNCTION,),
    "rabinowitsch": (RABINOWITSCH,),
}

IDEAL_OPERATIONS = ("sum", "product", "intersect", "quotient")


class OutputDocument(BaseModel):
    """一次调用输出的 JSON 文档，键顺序固定"""

    field: str
    nvars: Union[int, List[int]]
    pointset: Any
    operation: str
    result: Any
    certificate: Optional[Dict[str, Any]] = None
    report: Optional[List[Dict[str, Any]]] = None

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.model_dump(exclude_none=True), indent=indent, ensure_ascii=False)


@dataclass(frozen=True)
class EngineResult:
    """输出文档与是否为数学否定结果（退出码 1）"""

    document: OutputDocument
    negative: bool = False


def _ideal_json(ideal: Ideal) -> Dict[str, Any]:
    return {
        "generators": [g.representative.to_text() for g in ideal.generators],
        "principal_generator": ideal.principal_generator().representative.to_text(),
        "variety": ideal.variety().to_json(),
    }


class FqForgeEngine:
    """FqForge核心引擎：每个 CLI 子命令对应一个方法，返回 EngineResult"""

    def __init__(self, config_file: str | None = None):
        self.config = FqForgeConfig(config_file)

    @property
    def output_config(self) -> Dict[str, Any]:
        return self.config.get_output_config()

    def settings(self, **overrides) -> VerifySettings:
        return self.config.get_verify_settings(**overrides)

    # ---- 输入 ----

    @staticmethod
    def load_problem(
        field: str | None = None,
        nvars: int | None = None,
        points: str | None = None,
        problem: str | Path | None = None,
    ) -> ProblemFile:
        """由 --problem 或 --field/--nvars/--points 构造问题描述"""
        if problem is not None:
            return load_problem_file(problem)

        ring = None
        if points is not None and points != FULL:
            ring = load_pointset_file(points)
        spec = parse_field_descriptor(field) if field is not None else (ring.spec if ring else None)
        if spec is None:
            raise ProblemFileError("a field is required: pass --field, --points FILE or --problem")
        if nvars is None:
            if ring is None:
                raise ProblemFileError("the variable count is required: pass --nvars")
            nvars = ring.nvars
        if ring is None:
            ring = PointSet.full(spec, nvars)
        elif ring.spec != spec:
            raise FieldMismatchError(f"point-set file is over {ring.spec}, not {spec}")
        elif ring.nvars != nvars:
            raise ArityError(f"point-set file has n={ring.nvars}, not {nvars}")
        return ProblemFile(spec, nvars, ring)

    @staticmethod
    def ideal(problem: ProblemFile, gens: str) -> Ideal:
        return Ideal.from_polynomials(problem.points, problem.resolve_list(gens))

    @staticmethod
    def element(problem: ProblemFile, phi: str) -> RingElement:
        return embed(problem.resolve(phi), problem.points)

    @staticmethod
    def _require(value: str | None, name: str) -> str:
        if value is None or not value.strip():
            raise ProblemFileError(f"missing argument {name}")
        return value

    def _document(self, problem: ProblemFile, operation: str, result: Any, **extra) -> OutputDocument:
        return OutputDocument(
            field=problem.spec.descriptor(),
            nvars=problem.nvars,
            pointset=problem.points.to_json(),
            operation=operation,
            result=result,
            **extra,
        )

    # ---- 子命令 ----

    def variety(self, problem: ProblemFile, gens: str) -> EngineResult:
        ideal = self.ideal(problem, gens)
        subset = ideal.variety()
        result = {"points": subset.to_json(), "size": len(subset)}
        return EngineResult(self._document(problem, "variety", result))

    def ideal_of(self, problem: ProblemFile, subset: str | None = None) -> EngineResult:
        """不给子集时输出 I(S) 的生成元，否则输出 I_S(T) 的主生成元"""
        if subset is None:
            generators = ideal_of_pointset(problem.points)
            result = {"generators": [g.to_text() for g in generators]}
        else:
            chosen = parse_subset(subset, problem.points)
            result = {"subset": chosen.to_json(), **_ideal_json(vanishing_ideal(chosen))}
        return EngineResult(self._document(problem, "ideal-of", result))

    def member(self, problem: ProblemFile, phi: str, gens: str) -> EngineResult:
        ideal = self.ideal(problem, gens)
        element = self.element(problem, phi)
        if not ideal.contains(element):
            return EngineResult(
                self._document(problem, "member", {"member": False, "phi": element.to_text()}),
                negative=True,
            )
        certificate = ideal.certify(element)
        return EngineResult(
            self._document(
                problem,
                "member",
                {"member": True, "phi": element.to_text()},
                certificate=certificate.to_dict(element, ideal),
            )
        )

    def certify(self, problem: ProblemFile, phi: str, gens: str) -> EngineResult:
        """非成员时抛出 NonMemberError"""
        ideal = self.ideal(problem, gens)
        element = self.element(problem, phi)
        certificate = ideal.certify(element)
        return EngineResult(
            self._document(
                problem,
                "certify",
                {"phi": element.to_text(), "ideal": ideal.to_text()},
                certificate=certificate.to_dict(element, ideal),
            )
        )

    def unit_cert(self, problem: ProblemFile, gens: str) -> EngineResult:
        """真理想时抛出 ProperIdealError"""
        ideal = self.ideal(problem, gens)
        phi_star, selectors = ideal.single_nonvanishing_witness()
        certificate = ideal.unit_certificate()
        result = {
            "witness": phi_star.to_text(),
            "selectors": [psi.representative.to_text() for psi in selectors],
        }
        return EngineResult(
            self._document(
                problem, "unit-cert", result, certificate=certificate.to_dict(one(problem.points), ideal)
            )
        )

    def op(self, problem: ProblemFile, kind: str, gens: str, other: str) -> EngineResult:
        if kind not in IDEAL_OPERATIONS:
            raise FqForgeError(f"unknown ideal operation {kind!r}, expected one of {', '.join(IDEAL_OPERATIONS)}")
        i, j = self.ideal(problem, gens), self.ideal(problem, other)
        combined = {
            "sum": lambda: i + j,
            "product": lambda: i * j,
            "intersect": lambda: i & j,
            "quotient": lambda: i.quotient(j),
        }[kind]()
        return EngineResult(self._document(problem, f"op {kind}", _ideal_json(combined)))

    def radical(self, problem: ProblemFile, gens: str, phi: str | None = None, m: int = 2) -> EngineResult:
        """根理想即自身；给出 phi 时附带 <phi> = <phi^m> 与 Bézout 重建"""
        ideal = self.ideal(problem, gens)
        result = {**_ideal_json(ideal.radical()), "radical": ideal.radical().equals(ideal)}
        if phi is not None:
            element = self.element(problem, phi)
            witness = bezout_witness(m, problem.spec)
            result["power"] = {
                "phi": element.to_text(),
                "m": m,
                "equal": Ideal.principal(element).equals(Ideal.principal(element**m)),
                "u": witness.u.to_text(["x"]),
                "v": witness.v.to_text(["x"]),
                "reconstructed": witness.reconstruct(element) == element,
            }
        return EngineResult(self._document(problem, "radical", result))

    def equal(self, problem: ProblemFile, gens: str, other: str) -> EngineResult:
        i, j = self.ideal(problem, gens), self.ideal(problem, other)
        same = i.equals(j)
        result = {
            "equal": same,
            "variety": i.variety().to_json(),
            "other_variety": j.variety().to_json(),
        }
        return EngineResult(self._document(problem, "equal", result), negative=not same)

    def maximal(self, problem: ProblemFile, gens: str) -> EngineResult:
        ideal = self.ideal(problem, gens)
        maximal = ideal.is_maximal()
        result = {"maximal": maximal, "variety": ideal.variety().to_json()}
        return EngineResult(self._document(problem, "maximal", result), negative=not maximal)

    def rabinowitsch(self, problem: ProblemFile, phi: str, gens: str) -> EngineResult:
        ideal = self.ideal(problem, gens)
        element = self.element(problem, phi)
        lifted_ring, lifted = rabinowitsch_lift(ideal, element)
        empty = lifted.variety().is_empty()
        result = {
            "phi": element.to_text(),
            "lifted_points": len(lifted_ring),
            "lifted_variety": lifted.variety().to_json(),
            "member": empty,
        }
        if not empty:
            return EngineResult(self._document(problem, "rabinowitsch", result), negative=True)
        certificate = rabinowitsch_certificate(ideal, element)
        return EngineResult(
            self._document(
                problem, "rabinowitsch", result, certificate=certificate.to_dict(element, ideal)
            )
        )

    def reduce(self, problem: ProblemFile, phi: str) -> EngineResult:
        """指数约化 e ≥ q ↦ ((e-1) mod (q-1)) + 1，以及 K[S] 中的规范代表元"""
        polynomial = problem.resolve(phi)
        element = embed(polynomial, problem.points)
        result = {
            "input": polynomial.to_text(),
            "reduced": polynomial.reduce_exponents().to_text(),
            "representative": element.representative.to_text(),
            "values": [v.to_json() for v in element.values],
            "zero_function": element.is_zero(),
        }
        return EngineResult(self._document(problem, "reduce", result))

    def verify(
        self,
        target: str,
        orders: Sequence[int] | None = None,
        nvars: Sequence[int] | None = None,
        trials: int | None = None,
        seed: int | None = None,
        timings: bool = False,
    ) -> EngineResult:
        if target not in VERIFY_TARGETS:
            raise FqForgeError(f"unknown verify target {target!r}, expected one of {', '.join(VERIFY_TARGETS)}")
        settings = self.settings(trials=trials, seed=seed)
        orders = settings.fields if orders is None else orders
        nvars = settings.nvars if nvars is None else nvars
        specs = [FieldSpec.of_order(q) for q in orders]
        reports: List[VerificationReport] = verify_all(
            specs,
            list(nvars),
            settings.trials,
            settings.seed,
            settings=settings,
            statements=VERIFY_TARGETS[target],
        )
        summary = summarize(reports)
        document = OutputDocument(
            field=", ".join(spec.descriptor() for spec in specs),
            nvars=list(nvars),
            pointset="grid",
            operation=f"verify {target}",
            result={**summary, "seed": settings.seed, "trials": settings.trials},
            report=[r.to_document(timings) for r in reports],
        )
        return EngineResult(document, negative=not summary["passed"])

    # ---- 问题文件 ----

    def run(self, problem: ProblemFile) -> EngineResult:
        """执行问题文件中的 OPERATION 行"""
        request = problem.operation
        if request is None:
            raise ProblemFileError("the problem file has no OPERATION line")
        opts = request.options
        command = request.command
        if command == "variety":
            return self.variety(problem, self._require(opts.get("gens"), "gens="))
        if command == "ideal-of":
            return self.ideal_of(problem, opts.get("subset"))
        if command in ("member", "certify", "rabinowitsch"):
            method = {"member": self.member, "certify": self.certify, "rabinowitsch": self.rabinowitsch}[command]
            return method(
                problem, self._require(opts.get("phi"), "phi="), self._require(opts.get("gens"), "gens=")
            )
        if command == "unit-cert":
            return self.unit_cert(problem, self._require(opts.get("gens"), "gens="))
        if command == "op":
            if len(request.args) != 1:
                raise ProblemFileError(f"op expects one of {', '.join(IDEAL_OPERATIONS)}")
            return self.op(
                problem,
                request.args[0],
                self._require(opts.get("gens"), "gens="),
                self._require(opts.get("other"), "other="),
            )
        if command == "radical":
            m = opts.get("m", "2")
            if not m.isdigit() or int(m) < 1:
                raise ProblemFileError(f"m= expects a positive integer, got {m!r}")
            return self.radical(problem, self._require(opts.get("gens"), "gens="), opts.get("phi"), int(m))
        if command == "equal":
            return self.equal(
                problem, self._require(opts.get("gens"), "gens="), self._require(opts.get("other"), "other=")
            )
        if command == "maximal":
            return self.maximal(problem, self._require(opts.get("gens"), "gens="))
        if command == "reduce":
            return self.reduce(problem, self._require(opts.get("phi"), "phi="))
        raise ProblemFileError(f"unknown operation {command!r}")
