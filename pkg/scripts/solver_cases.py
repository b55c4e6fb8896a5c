"""How often each recursive case of the second solver fires over the corpus leaves."""

from collections import Counter

from nzflow import reduction, solver_one, solver_two
from nzflow.generators import corpus


def main():
    cases = Counter()
    one = 0
    for _, g in corpus():
        for leaf in reduction.leaves(reduction.reduce(g)):
            if leaf.kind != "cubic":
                continue
            solver_two.solve_cubic(leaf.graph, observer=lambda inst, case: cases.update([case.value]))
            one += sum(1 for _ in _instances(leaf.graph))
    for name, count in cases.most_common():
        print(f"{name:24s} {count}")
    print(f"first solver instances: {one}")


def _instances(g):
    seen = []
    solver_one.solve_cubic(g, observer=seen.append)
    return seen


if __name__ == "__main__":
    main()
