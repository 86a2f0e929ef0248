from .factor import UnivariateFactorization, dense_factor, univariate_factor
from .monomial import monomial_primary_decomposition
from .primary import (AssociatedPrimes, PrimaryComponent, PrimaryDecomposition, associated_primes,
                      canonical_key, closure_by_saturation, cyclic_filtration, ideal_candidate_primes,
                      independent_set, is_supported_prime, localize_at, primary_decomposition,
                      verify_decomposition)
from .torsion import TorsionClosure, rationalize_ideal, split_transcendental, torsion_closure
from .zerodim import (ZeroDimDecomposition, eliminant, minimal_polynomial, multiplication_matrices,
                      radical_zero_dim, rational_points_zero_dim, zero_dim_decomposition)
