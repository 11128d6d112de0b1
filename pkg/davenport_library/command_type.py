from enum import Enum


class CommandType(Enum):
    """
    Enum for the commands of the dav tool. Exactly one command runs per invocation.

    COMPUTE_SMALL ("compute-small"):
        Enumerate product-one free sequences of a group and report d(G) with per-level counts.

    COMPUTE_LARGE ("compute-large"):
        Enumerate atoms of a group and report D(G) with per-level counts.

    TABLE ("table"):
        Compute d and D for the non-abelian groups of order less than 32 and compare them with the stored table.

    VERIFY ("verify"):
        Audit d + 1 <= β <= D, strict monotonicity of β and the Cayley diameter bound for every group of order less than 32.

    DIAMETER ("diameter"):
        Diameter of a Cayley digraph of a group, with a product-one sequence of length diameter + 1.

    AUT ("aut"):
        Size of the automorphism group of a group.

    FORMULAS ("formulas"):
        Closed-form constants and bounds that apply to a group.
    """
    COMPUTE_SMALL = "compute-small"
    COMPUTE_LARGE = "compute-large"
    TABLE = "table"
    VERIFY = "verify"
    DIAMETER = "diameter"
    AUT = "aut"
    FORMULAS = "formulas"
