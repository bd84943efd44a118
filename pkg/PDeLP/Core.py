"""
PDeLP 主模块

解释器编排：配置、语法前端与推理管理器组合在一起，
对一个已加载的程序回答查询。命令行只通过这里访问引擎。
"""

from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .argumentation import (
    Answer,
    Argument,
    ArgumentBuilder,
    DialecticalAnalyzer,
    DialecticalTree,
)
from .config import PDeLPConfig
from .errors import PDeLPError
from .lang import parse_clauses, parse_query
from .logic import Literal, Program, ProofTree, ValidationReport, best_proof, max_degree
from .logic.core import partition, validate_program
from .utils import get_logger


class Interpreter:
    """
    P-DeLP 解释器

    子系统：
    - 论证构造：按文字缓存论证集合
    - 辩证分析：击败者缓存 + 辩证树 + 担保
    """

    def __init__(self, config: Optional[PDeLPConfig] = None, logger=None):
        self.logger = logger or get_logger()
        self.config = config or PDeLPConfig(logger=self.logger)

        self.program: Optional[Program] = None
        self.source: Optional[str] = None
        self.builder: Optional[ArgumentBuilder] = None
        self.analyzer: Optional[DialecticalAnalyzer] = None

    # ==================== 加载 ====================

    def load_text(
        self, text: str, source: str = "<string>"
    ) -> Union[Program, ValidationReport]:
        """
        解析并校验程序文本

        Returns:
            合法时返回 Program（同时成为当前程序），否则返回 ValidationReport

        Raises:
            ParseErrorList: 语法错误
        """
        clauses = parse_clauses(text)
        pi, delta = partition(clauses)
        result = validate_program(pi, delta)
        self.source = source
        if isinstance(result, ValidationReport):
            self.logger.info(f"程序 {source} 未通过校验: {len(result.violations)} 处违规")
            return result

        self.program = result
        self.builder = ArgumentBuilder(result, self.config, self.logger)
        self.analyzer = DialecticalAnalyzer(result, self.config, self.logger, self.builder)
        if not clauses:
            self.logger.warning(f"程序 {source} 为空")
        self.logger.info(
            f"已加载程序 {source}: |Π|={len(result.pi)} |Δ|={len(result.delta)}"
        )
        return result

    def load_file(self, path: str) -> Union[Program, ValidationReport]:
        """
        读取 UTF-8 程序文件（允许 BOM）

        Raises:
            OSError: 文件无法读取
            UnicodeDecodeError: 文件不是合法的 UTF-8
            ParseErrorList: 语法错误
        """
        with open(path, "rb") as f:
            data = f.read()
        return self.load_text(data.decode("utf-8-sig"), path)

    def _require(self) -> Program:
        if self.program is None:
            raise PDeLPError("尚未加载合法程序")
        return self.program

    # ==================== 查询 ====================

    @staticmethod
    def goal(text: Union[str, Literal]) -> Literal:
        return text if isinstance(text, Literal) else parse_query(text)

    def prove(self, goal: Union[str, Literal]) -> Tuple[Fraction, Optional[ProofTree]]:
        """最大推理度与最优证明（基于 Π ∪ Δ，不做论证分析）"""
        program = self._require()
        literal = self.goal(goal)
        return max_degree(program.clauses, literal), best_proof(program.clauses, literal)

    def arguments(self, goal: Union[str, Literal]) -> Tuple[Argument, ...]:
        self._require()
        return self.builder.arguments_for(self.goal(goal))

    def answer(self, goal: Union[str, Literal], pruning: Optional[bool] = None) -> Answer:
        self._require()
        return self.analyzer.answer(self.goal(goal), pruning)

    def trees(
        self, goal: Union[str, Literal], pruning: Optional[bool] = None
    ) -> List[DialecticalTree]:
        """目标每个论证一棵辩证树，按论证排序键排列"""
        self._require()
        return [
            self.analyzer.build_tree(argument, pruning)
            for argument in self.arguments(goal)
        ]
