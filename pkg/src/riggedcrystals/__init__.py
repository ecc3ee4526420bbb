"""Exact combinatorics of the type-A infinity crystal in three models:
rigged configurations, marginally large tableaux and marginally large
reverse tableaux, with the exponent-triangle parametrizations connecting
them and the finite highest weight crystals cut out by weight inequalities.
"""

from .blambda import (LambdaElement, blambda_rc_set, enumerate_psilambda,
                      enumerate_xlambda, in_psilambda, in_xlambda,
                      ssyt_count_oracle)
from .errors import (HeightBoundError, InvalidExponentsError,
                     MalformedInputError, NotInCrystalError)
from .forward import (ForwardExponents, Membership, check_forward_inequalities,
                      extend_forward, is_member_rcinf, lengths_riggings_forward,
                      rc_from_forward, recover_forward, validate_forward,
                      word_of_forward)
from .iso import (mlrt_to_mlt, mlrt_to_rc, mlt_to_mlrt, mlt_to_rc, rc_to_mlrt,
                  rc_to_mlt)
from .rc import (RiggedConfiguration, RiggedRow, apply_f, apply_f_word,
                 empty_rc, rc_from_json, rc_to_json, weight)
from .reverse import (ReverseExponents, check_reverse_inequalities,
                      extend_reverse, is_member_rcinf_reverse, rc_from_reverse,
                      recover_reverse, validate_reverse, word_of_reverse)
from .tableaux import (MarginallyLargeReverseTableau, MarginallyLargeTableau,
                       apply_f_mlrt, apply_f_mlt, ascii_art, forward_from_mlt,
                       highest_mlrt, highest_mlt, mlrt_from_reverse,
                       mlt_from_forward, reverse_from_mlrt, tableau_from_json,
                       tableau_to_json)

__all__ = [name for name in dir() if not name.startswith("_")]
