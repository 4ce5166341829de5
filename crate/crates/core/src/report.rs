//! Aggregated structural report of one algebra.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::LeibnizAlgebra;
use crate::completeness::is_complete;
use crate::derivation::derivation_basis;
use crate::error::Result;
use crate::holomorph::{build_holomorph, decomposition_check};
use crate::radical::{semisimplicity_flags, Status, SuiteConfig, Supplied, Verdict};
use crate::scalar::FieldSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HolSummary {
    pub sums_to_hol: bool,
    #[serde(rename = "Z_meet_I_trivial")]
    pub z_meet_i_trivial: bool,
    #[serde(rename = "A_meet_ZI_equals_leib")]
    pub a_meet_zi_equals_leib: bool,
}

/// `semisimple`, `char_semisimple` and `crad_dim` are `None` when no certified
/// radical exists in the field's characteristic.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub dim: usize,
    pub field: FieldSpec,
    pub leib_dim: usize,
    pub left_center_dim: usize,
    pub quotient_center_dim: usize,
    pub der_dim: usize,
    pub solvable: bool,
    pub nilpotent: bool,
    pub derived_length: Option<usize>,
    pub nilpotency_class: Option<usize>,
    pub semisimple: Option<bool>,
    pub char_semisimple: Option<bool>,
    pub char_simple_verdict: Verdict,
    pub crad_dim: Option<usize>,
    pub all_inner: bool,
    pub complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hol_decomposition: Option<HolSummary>,
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    pub skip_hol: bool,
    pub supplied: Supplied,
    pub config: SuiteConfig,
}

pub fn analyze(a: &LeibnizAlgebra, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    let series = a.series_profile();
    let der = derivation_basis(a);
    let comp = is_complete(a);
    let profile = semisimplicity_flags(a, &der, &opts.supplied, &opts.config)?;
    let hol_decomposition = if opts.skip_hol {
        None
    } else {
        let dec = decomposition_check(&build_holomorph(a)?)?;
        Some(HolSummary {
            sums_to_hol: dec.sums_to_hol,
            z_meet_i_trivial: dec.z_meet_i_trivial,
            a_meet_zi_equals_leib: dec.a_meet_zi_equals_leib,
        })
    };
    Ok(AnalysisReport {
        dim: a.dim(),
        field: a.field(),
        leib_dim: a.leib_ideal().dim(),
        left_center_dim: a.left_center().dim(),
        quotient_center_dim: comp.quotient_center_dim,
        der_dim: der.dim(),
        solvable: series.is_solvable(),
        nilpotent: series.is_nilpotent(),
        derived_length: series.derived_length,
        nilpotency_class: series.nilpotency_class,
        semisimple: profile.semisimple,
        char_semisimple: profile.characteristically_semisimple,
        char_simple_verdict: profile.characteristically_simple,
        crad_dim: profile.crad.map(|c| c.dim()),
        all_inner: comp.all_inner,
        complete: comp.complete,
        hol_decomposition,
    })
}

impl AnalysisReport {
    /// True when some verdict or radical-dependent flag could not be decided.
    pub fn has_undecided(&self) -> bool {
        self.char_simple_verdict.status == Status::Undecided || self.semisimple.is_none()
    }

    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map_or_else(|| "unknown".to_string(), T::to_string)
        }
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(out, "{k:<20} {v}");
        };
        line("dim", self.dim.to_string());
        line("field", self.field.to_string());
        line("leib_dim", self.leib_dim.to_string());
        line("left_center_dim", self.left_center_dim.to_string());
        line("quotient_center_dim", self.quotient_center_dim.to_string());
        line("der_dim", self.der_dim.to_string());
        line("solvable", self.solvable.to_string());
        line("nilpotent", self.nilpotent.to_string());
        line("derived_length", opt(&self.derived_length));
        line("nilpotency_class", opt(&self.nilpotency_class));
        line("semisimple", opt(&self.semisimple));
        line("char_semisimple", opt(&self.char_semisimple));
        line("char_simple", self.char_simple_verdict.to_string());
        line("crad_dim", opt(&self.crad_dim));
        line("all_inner", self.all_inner.to_string());
        line("complete", self.complete.to_string());
        if let Some(h) = &self.hol_decomposition {
            line("hol.sums_to_hol", h.sums_to_hol.to_string());
            line("hol.Z_meet_I_trivial", h.z_meet_i_trivial.to_string());
            line("hol.A_meet_ZI_is_leib", h.a_meet_zi_equals_leib.to_string());
        }
        out
    }
}
