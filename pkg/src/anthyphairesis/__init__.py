"""Exact anthyphairesis (continued fractions) of integer pairs and sqrt(N)."""

from .arith import (DomainError, RangeError, SurdContext, SurdElement, isqrt,
                    surd_add, surd_floor_div, surd_mul, surd_scale, surd_sign,
                    surd_sub)
from .engine import (BudgetExceeded, Commensurable, Expansion, Incommensurable,
                     LogosWitness, Step, anth_integers, anth_step,
                     anth_surd_logos, anth_surd_state, commensurability,
                     logos_equal)
from .approx import (Convergent, SideDiameterPair, TrueJudgement, convergents,
                     pell_residue, side_diameter, true_judgement)
from .analysis import (PalindromeReport, species_count, theodorus_batch,
                       topica_check, verify_palindrome)
