"""Classification of periodic maps on closed surfaces by their data."""

from .data_model import (Condition, OpData, OrData, PreData, Residue, ValidationReport, Valency,
                         mod_inverse, valency_of)
from .equivalence import CanonKey, canon_or, closure, eq_or, local_classes, r3_reduce
from .errors import (BudgetExceeded, EvenExponent, MalformedData, NotClosed, NotCoprime,
                     NotLiftable, NotRealizable, PeriodAtlasError, PreconditionError,
                     TableMismatch, ValidatorMismatch)
from .large_period import (ClassRecord, HiroseRow, enumerate_classes, hirose_rows,
                           large_period_survey, max_period, verify_table_3g)
from .monodromy_oracle import cycle_count, oracle_genus, oracle_genus_or
from .op_maps import canon_op, genus_op, power_op, total_valency, validate_op
from .or_maps import genus_or, lift_predata, power_or, predata_of, quotient_of, validate_or

__version__ = "0.1.0"
