//! Complete Leibniz algebras: trivial center modulo Leib and only inner derivations.

use crate::algebra::LeibnizAlgebra;
use crate::derivation::{derivation_basis, inner_witnesses, InnerWitness};
use crate::error::{LeibError, Result};
use crate::radical::Verdict;

#[derive(Clone, Debug)]
pub struct CompletenessReport {
    pub quotient_center_dim: usize,
    pub der_dim: usize,
    pub all_inner: bool,
    pub complete: bool,
    /// One entry per canonical derivation basis element.
    pub witnesses: Vec<InnerWitness>,
}

impl CompletenessReport {
    /// Index of the first basis derivation without an inner witness.
    pub fn first_outer(&self) -> Option<usize> {
        self.witnesses.iter().position(|w| !w.is_inner())
    }
}

pub fn is_complete(a: &LeibnizAlgebra) -> CompletenessReport {
    let der = derivation_basis(a);
    let witnesses = inner_witnesses(a, &der);
    let all_inner = witnesses.iter().all(InnerWitness::is_inner);
    let quotient_center_dim = a.quotient_center_dim();
    CompletenessReport {
        quotient_center_dim,
        der_dim: der.dim(),
        all_inner,
        complete: quotient_center_dim == 0 && all_inner,
        witnesses,
    }
}

/// Checks the implication "A/Leib(A) complete ⇒ A complete" on this algebra.
pub fn check_prop_3_2(a: &LeibnizAlgebra) -> Verdict {
    let lie = a.lie_quotient().algebra;
    let hyp = is_complete(&lie);
    if !hyp.complete {
        return Verdict::yes("vacuous: the Lie quotient is not complete");
    }
    let concl = is_complete(a);
    if concl.complete {
        Verdict::yes("the Lie quotient and the algebra are both complete")
    } else {
        Verdict::no(format!(
            "the Lie quotient is complete but the algebra is not (quotient center dim {}, all inner {})",
            concl.quotient_center_dim, concl.all_inner
        ))
    }
}

/// For nilpotent `A`: yes iff the center modulo Leib is nonzero and `A` is not complete.
pub fn check_nilpotent_incompleteness(a: &LeibnizAlgebra) -> Result<Verdict> {
    if !a.is_nilpotent() {
        return Err(LeibError::NotNilpotent);
    }
    let r = is_complete(a);
    Ok(if r.quotient_center_dim > 0 && !r.complete {
        Verdict::yes(format!("center of the Lie quotient has dimension {}", r.quotient_center_dim))
    } else {
        Verdict::no(format!(
            "nilpotent algebra with quotient center dim {} and complete = {}",
            r.quotient_center_dim, r.complete
        ))
    })
}
