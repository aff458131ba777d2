"""Schur numbers, mantissa pigeonholing over a finite prime basis, and the
Fermat quartic, as executable and independently checkable computations."""

from .arith import (MantissaDecomposition, PrimeBasis, decompose, factor_over_basis,
                    is_prime, is_square, mantissa_index, residues_from_index,
                    smooth_numbers)
from .descent import (DescentReport, FailedCondition, PythTriple, QuarticCandidate,
                      descent_audit, descent_step, parametrize, primitive_triples,
                      search_quartic)
from .errors import (CapExceeded, CapRequired, HorizonExhausted, MantissaMismatch,
                     NotATriple, NotPrimitive, NotSmooth, SumMismatch,
                     VerificationError)
from .pipeline import (ContradictionCertificate, EuclidWitness, MantissaColoring,
                       ProofDemoReport, SweepReport, color_by_mantissa,
                       contradiction_certificate, euclid_witness, run_proof_demo,
                       verify_no_mono_smooth_triple)
from .schur import (Coloring, SchurCertificate, SchurTriple, TripleMode,
                    default_horizon, find_monochromatic_triple, guaranteed_triple,
                    is_admissible, schur_number)

__version__ = "0.1.0"
