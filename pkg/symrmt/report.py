"""This module implements verification report accumulation and printing"""
import collections
import typing as ty

import tabulate


class CheckResult(ty.NamedTuple):
    suite: str
    name: str
    passed: bool
    expected: str
    computed: str


_results: ty.List[CheckResult] = list()

_suite_counts: ty.MutableMapping[str, ty.Counter[str]] = (
    collections.defaultdict(collections.Counter)
)


def record(result: CheckResult) -> CheckResult:
    _results.append(result)
    outcome = "passed" if result.passed else "failed"
    _suite_counts[result.suite][outcome] += 1
    return result


def reset() -> None:
    _results.clear()
    _suite_counts.clear()


def failures() -> ty.List[CheckResult]:
    return [r for r in _results if not r.passed]


def checked() -> int:
    return len(_results)


Item = ty.Union[str, int, float]
Table = ty.List[ty.Mapping[str, Item]]
Report = ty.Mapping[str, Table]


def compile() -> Report:
    return {
        "Suites": [
            {
                "Suite": suite,
                "Checked": sum(counts.values()),
                "Passed": counts["passed"],
                "Failed": counts["failed"],
            }
            for suite, counts in _suite_counts.items()
        ],
        "Failed identities": [
            {
                "Suite": r.suite,
                "Identity": r.name,
                "Expected": r.expected,
                "Computed": r.computed,
            }
            for r in failures()
        ],
    }


def print_report() -> None:
    for name, data in compile().items():
        if len(data) == 0:
            continue
        print("-" * 69)
        print(f"-- {name}:")
        print(tabulate.tabulate(data, headers="keys"))
        print("\n")
    print(f"{checked()} identities checked, {len(failures())} failed")
