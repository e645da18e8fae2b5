"""Standard bases and Hilbert series for 4-generated pseudo-symmetric
numerical semigroups."""

from .basis import (BasisFamily, SParameters, build_family, compute_s,
                    is_tangent_cone_cm, leading_forms, leading_monomials)
from .errors import (ArithmeticOverflow, ConsistencyFailure, InternalLimit,
                     InvalidParameters, LeadingFormMismatch,
                     MonotonicityViolation, NonBinomialEscape, NotDivisible)
from .hilbert import (HilbertReport, closed_form_P, closed_form_P1,
                      closed_form_P2, closed_form_P2_corrected, closed_form_Q,
                      closed_form_Q_corrected, closed_form_Q_simplified,
                      hilbert_report)
from .identities import appendix_identity_checks
from .local_algebra import (Binomial, Monomial, binomial, is_standard_basis,
                            leading_form, mora_nf, spoly)
from .monomial_ideal import MonomialIdeal, bayer_stillman_P, colon, staircase_hilbert
from .semigroup import (ConditionReport, GeneratorTuple, OrderTable,
                        PseudoSymParams, check_conditions, compute_order_table,
                        derive_generators, oracle_hilbert)
from .unipoly import UniPoly, divide_exact

__version__ = "0.1.0"
