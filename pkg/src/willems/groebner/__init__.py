from .basis import (DEFAULT_CAPS, Caps, Ideal, Submodule, as_ideal, audit_start, audit_stop,
                    audited_bases, buchberger_raw, is_groebner_raw, reduce_vector)
from .ops import (ZeroDimInfo, buchberger, colon_ideal, colon_poly, eliminate, exact_divide,
                  ideal_power, ideal_product, ideal_times_free, intersect, intersect_all,
                  is_zero_dimensional, keep_variables, krull_dimension, module_quotient, module_sum,
                  monomials_up_to, normal_form, quotient, saturate, standard_monomials, syzygies,
                  truncation_basis)
