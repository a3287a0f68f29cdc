"""FqForge CLI 主入口点"""

from typing import Callable, List, Optional

import click
from rich.console import Console

from .. import __version__
from ..core.engine import IDEAL_OPERATIONS, VERIFY_TARGETS, EngineResult, FqForgeEngine
from ..instruction import ProblemFile, load_problem_file
from ..utils.progress_indicator import VerificationProgress
from .errors import EXIT_NEGATIVE, ErrorClassifier
from .formatter import FqForgeResultFormatter

Action = Callable[[FqForgeEngine, Optional[ProblemFile]], EngineResult]


def _int_list(minimum: int):
    """逗号分隔的整数列表，例如 2,3,4；每一项不小于 minimum"""

    def callback(ctx, param, value: str | None):
        if value is None:
            return None
        try:
            numbers = tuple(int(part) for part in value.split(",") if part.strip())
        except ValueError:
            raise click.BadParameter(f"expected comma-separated integers, got {value!r}") from None
        if not numbers:
            raise click.BadParameter("expected at least one integer")
        if min(numbers) < minimum:
            raise click.BadParameter(f"values must be at least {minimum}, got {min(numbers)}")
        return numbers

    return callback


def _apply(options: List[Callable]) -> Callable:
    def decorator(f):
        for option in reversed(options):
            f = option(f)
        return f

    return decorator


problem_options = _apply(
    [
        click.option("--field", help="有限域描述，如 GF(4) 或 'GF(4; modulus=t^2+t+1)'"),
        click.option("--nvars", type=int, help="变量个数 n"),
        click.option("--points", help="点集文件路径，或 FULL（默认）"),
        click.option("--problem", help="问题文件路径（提供域、变量数、点集与具名多项式）"),
    ]
)

output_options = _apply(
    [
        click.option("--json", "as_json", is_flag=True, help="输出 JSON 文档"),
        click.option("--config", envvar="FQFORGE_CONFIG", help="配置文件路径"),
        click.option("--quiet", is_flag=True, help="不显示进度"),
    ]
)


def execute(ctx: click.Context, options: dict, action: Action, needs_problem: bool = True) -> None:
    """执行一个子命令：错误映射为退出码，否定结果输出文档后以 1 退出"""
    classifier = ErrorClassifier()
    try:
        engine = FqForgeEngine(options.get("config"))
        VerificationProgress.get_instance().set_show_progress(not options.get("quiet"))
        problem = None
        if needs_problem:
            problem = engine.load_problem(
                options.get("field"), options.get("nvars"), options.get("points"), options.get("problem")
            )
        outcome = action(engine, problem)
    except Exception as e:
        if not classifier.handles(e):
            raise
        info = classifier.classify_error(e)
        click.echo(info.diagnostic(), err=True)
        ctx.exit(info.exit_code)

    if options.get("as_json"):
        indent = engine.output_config.get("json_indent", 2)
        click.echo(outcome.document.to_json(indent))
    else:
        FqForgeResultFormatter(Console()).format_document(outcome.document)
    if outcome.negative:
        ctx.exit(EXIT_NEGATIVE)


def command(f):
    """子命令的公共选项与上下文"""
    return problem_options(output_options(click.pass_context(f)))


@click.group()
@click.version_option(version=__version__, prog_name="fqforge")
def cli():
    """FqForge：有限点集坐标环 K[S] 上的理想与簇的对应及零点定理证书"""


@cli.command()
@click.option("--gens", required=True, help="生成元，逗号分隔")
@command
def variety(ctx, gens, **options):
    """V_S(J)：生成元的公共零点"""
    execute(ctx, options, lambda engine, problem: engine.variety(problem, gens))


@cli.command("ideal-of")
@click.option("--subset", help="S 的子集 T，分号分隔的点，如 '0,1; 1,1'")
@command
def ideal_of(ctx, subset, **options):
    """I(S) 的生成元，或给定 T 时 I_S(T) 的主生成元"""
    execute(ctx, options, lambda engine, problem: engine.ideal_of(problem, subset))


@cli.command()
@click.option("--phi", required=True, help="待判定的元素")
@click.option("--gens", required=True, help="生成元，逗号分隔")
@command
def member(ctx, phi, gens, **options):
    """判定 φ ∈ J，成员时附带证书"""
    execute(ctx, options, lambda engine, problem: engine.member(problem, phi, gens))


@cli.command()
@click.option("--phi", required=True, help="待证明的元素")
@click.option("--gens", required=True, help="生成元，逗号分隔")
@command
def certify(ctx, phi, gens, **options):
    """构造成员证书 Σ h_i·φ_i = φ"""
    execute(ctx, options, lambda engine, problem: engine.certify(problem, phi, gens))


@cli.command("unit-cert")
@click.option("--gens", required=True, help="生成元，逗号分隔")
@command
def unit_cert(ctx, gens, **options):
    """V_S(J) = ∅ 时构造 Σ h_i·φ_i = [1]"""
    execute(ctx, options, lambda engine, problem: engine.unit_cert(problem, gens))


@cli.command()
@click.argument("kind", type=click.Choice(IDEAL_OPERATIONS))
@click.option("--gens", required=True, help="理想 I 的生成元")
@click.option("--other", required=True, help="理想 J 的生成元")
@command
def op(ctx, kind, gens, other, **options):
    """理想运算 I+J、I·J、I∩J、I:J"""
    execute(ctx, options, lambda engine, problem: engine.op(problem, kind, gens, other))


@cli.command()
@click.option("--gens", required=True, help="生成元，逗号分隔")
@click.option("--phi", help="同时检查 <φ> = <φ^m> 的元素")
@click.option("--m", "m", type=click.IntRange(min=1), default=2, show_default=True, help="幂次")
@command
def radical(ctx, gens, phi, m, **options):
    """根理想与 Bézout 重建 φ = u(φ)·φ^m"""
    execute(ctx, options, lambda engine, problem: engine.radical(problem, gens, phi, m))


@cli.command()
@click.option("--gens", required=True, help="理想 I 的生成元")
@click.option("--other", required=True, help="理想 J 的生成元")
@command
def equal(ctx, gens, other, **options):
    """语义相等 I = J（按簇比较）"""
    execute(ctx, options, lambda engine, problem: engine.equal(problem, gens, other))


@cli.command()
@click.option("--gens", required=True, help="生成元，逗号分隔")
@command
def maximal(ctx, gens, **options):
    """J 是否为极大理想"""
    execute(ctx, options, lambda engine, problem: engine.maximal(problem, gens))


@cli.command()
@click.option("--phi", required=True, help="待判定的元素")
@click.option("--gens", required=True, help="生成元，逗号分隔")
@command
def rabinowitsch(ctx, phi, gens, **options):
    """在 S × F_q 上用 Rabinowitsch 技巧判定 φ ∈ I_S(V_S(J))"""
    execute(ctx, options, lambda engine, problem: engine.rabinowitsch(problem, phi, gens))


@cli.command()
@click.option("--phi", required=True, help="待约化的多项式")
@command
def reduce(ctx, phi, **options):
    """指数约化与 K[S] 中的规范代表元"""
    execute(ctx, options, lambda engine, problem: engine.reduce(problem, phi))


@cli.command()
@click.argument("problemfile")
@output_options
@click.pass_context
def run(ctx, problemfile, **options):
    """执行问题文件中的 OPERATION 行"""
    execute(
        ctx,
        options,
        lambda engine, _: engine.run(load_problem_file(problemfile)),
        needs_problem=False,
    )


@cli.command()
@click.argument("target", type=click.Choice(list(VERIFY_TARGETS)))
@click.option("--q", "orders", callback=_int_list(2), help="域的阶，逗号分隔，如 2,3,4")
@click.option("--n", "nvars", callback=_int_list(0), help="变量个数，逗号分隔，如 1,2")
@click.option("--trials", type=click.IntRange(min=0), help="每个点集的随机实例数")
@click.option("--seed", type=int, help="随机种子")
@click.option("--timings", is_flag=True, help="在报告中包含耗时")
@output_options
@click.pass_context
def verify(ctx, target, orders, nvars, trials, seed, timings, **options):
    """在 (域, 变量数, 点集) 网格上验证各命题"""

    def action(engine: FqForgeEngine, _):
        show = timings or bool(engine.output_config.get("show_timings", False))
        return engine.verify(target, orders, nvars, trials=trials, seed=seed, timings=show)

    execute(ctx, options, action, needs_problem=False)


def main(args: Optional[list] = None):
    """CLI 主函数"""
    return cli.main(args=args, prog_name="fqforge")
