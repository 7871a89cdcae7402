"""Text rendering for the CLI: lattice grids and violation reports"""

from engine.capacity import ViolationReport
from engine.proof_kit import in_a_tilde, in_b_tilde
from utils.file_formats import format_rational

GRID_MARKS = {
    (True, False): "o",
    (False, True): "^",
    (True, True): "@",
    (False, False): ".",
}


def render_lemma_grid(k: int, bound: int) -> str:
    """Window [0, bound]^2 with the origin bottom-left

    ``o`` marks A~_k only, ``^`` B~_k only, ``@`` both, ``.`` neither.
    """
    rows = []
    for y in range(bound, -1, -1):
        rows.append("".join(GRID_MARKS[(in_a_tilde(x, y, k), in_b_tilde(x, y, k))]
                            for x in range(bound + 1)))
    return "\n".join(rows) + "\n"


def render_submodularity_violation(report: ViolationReport) -> str:
    a_event, b_event = report.witnesses
    return (f"A={a_event} B={b_event}\n"
            f"c(A|B)+c(A&B) = {format_rational(report.lhs)}\n"
            f"c(A)+c(B) = {format_rational(report.rhs)}\n")


def render_machine_violation(report: ViolationReport) -> str:
    a_event, b_event = report.witnesses
    return (f"A={a_event.mask}\nB={b_event.mask}\n"
            f"lhs={format_rational(report.lhs)}\nrhs={format_rational(report.rhs)}\n")
