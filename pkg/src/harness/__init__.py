"""
Harness public API

便捷导出：
- 文档：parse_element, serialize_element, load_element, save_element
- 注册：CheckSpec, register_spec, get_spec, list_specs
- 执行：run_suite, SuiteRunner, RunReport
"""

from .documents import ElementDocument, load_element, parse_element, save_element, serialize_element
from .registry import CheckSpec, RunContext, get_spec, list_specs, register_callable_check, register_spec
from .runner import RunReport, SuiteEntry, SuiteRunner, SuiteSummary, run_suite

__all__ = [
    "CheckSpec",
    "ElementDocument",
    "RunContext",
    "RunReport",
    "SuiteEntry",
    "SuiteRunner",
    "SuiteSummary",
    "get_spec",
    "list_specs",
    "load_element",
    "parse_element",
    "register_callable_check",
    "register_spec",
    "run_suite",
    "save_element",
    "serialize_element",
]
