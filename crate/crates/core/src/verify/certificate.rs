//! The result of a slack scan: a verdict for every catalogue view plus the
//! exact dual data the scan used, with a deterministic plain-text report.

use std::fmt::Write as _;

use crate::algebra::{ratfn_to_text, RatFn};
use crate::coeffs::{Case, Sense};

/// Outcome of the sign check on one view's slack polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViewStatus {
    /// The slack is identically zero. Acceptable only on support views.
    Zero,
    /// The slack is strictly positive for every t > 0, r >= 0.
    Positive,
    /// Neither sign check succeeded. The witness is a monomial whose
    /// coefficient stayed negative after the multiplier step, if any.
    Fail { witness: Option<(u32, u32)> },
}

/// A completed certificate for one case: candidate optimum, dual
/// variables, support set, and one status per view. `pass` holds exactly
/// when no view failed and the zero-slack views are precisely the support.
#[derive(Debug, Clone)]
pub struct Certificate {
    case: Case,
    catalogue_hash: String,
    u_star: RatFn,
    deltas: Vec<(String, RatFn)>,
    support: Vec<usize>,
    statuses: Vec<ViewStatus>,
    pass: bool,
}

impl Certificate {
    pub fn new(
        case: Case,
        catalogue_hash: String,
        u_star: RatFn,
        deltas: Vec<(String, RatFn)>,
        support: Vec<usize>,
        statuses: Vec<ViewStatus>,
    ) -> Certificate {
        let pass = statuses.iter().enumerate().all(|(i, st)| match st {
            ViewStatus::Zero => support.contains(&i),
            ViewStatus::Positive => !support.contains(&i),
            ViewStatus::Fail { .. } => false,
        });
        Certificate {
            case,
            catalogue_hash,
            u_star,
            deltas,
            support,
            statuses,
            pass,
        }
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn catalogue_hash(&self) -> &str {
        &self.catalogue_hash
    }

    /// The certified optimum value as a rational function of (t, r).
    pub fn u_star(&self) -> &RatFn {
        &self.u_star
    }

    /// Dual variables as (shape label, value) pairs; empty for the
    /// maximisation case.
    pub fn deltas(&self) -> &[(String, RatFn)] {
        &self.deltas
    }

    /// Catalogue indices where the slack is expected to vanish.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn statuses(&self) -> &[ViewStatus] {
        &self.statuses
    }

    /// True when every view is accounted for: zero exactly on the support,
    /// strictly positive everywhere else.
    pub fn pass(&self) -> bool {
        self.pass
    }

    pub fn tight_count(&self) -> usize {
        self.statuses
            .iter()
            .filter(|s| matches!(s, ViewStatus::Zero))
            .count()
    }

    pub fn strict_count(&self) -> usize {
        self.statuses
            .iter()
            .filter(|s| matches!(s, ViewStatus::Positive))
            .count()
    }

    pub fn failed_count(&self) -> usize {
        self.statuses
            .iter()
            .filter(|s| matches!(s, ViewStatus::Fail { .. }))
            .count()
    }

    /// Deterministic plain-text report: a meta section naming the case and
    /// catalogue, the dual data, the support set, one verdict line per
    /// view, and a final summary line.
    pub fn report(&self) -> String {
        let sense = match self.case.sense() {
            Sense::Min => "min",
            Sense::Max => "max",
        };
        let mut out = String::new();
        out.push_str("CERT1\n[meta]\n");
        writeln!(out, "case={}", self.case).unwrap();
        writeln!(out, "sense={sense}").unwrap();
        writeln!(out, "catalogue={}", self.catalogue_hash).unwrap();
        out.push_str("[dual]\n");
        out.push_str("u_star:\n");
        out.push_str(&ratfn_to_text(&self.u_star));
        for (label, value) in &self.deltas {
            writeln!(out, "delta {label}:").unwrap();
            out.push_str(&ratfn_to_text(value));
        }
        let support: Vec<String> = self.support.iter().map(|i| i.to_string()).collect();
        out.push_str("[support]\n");
        writeln!(out, "views: {}", support.join(" ")).unwrap();
        out.push_str("[verdicts]\n");
        for (i, status) in self.statuses.iter().enumerate() {
            match status {
                ViewStatus::Zero => writeln!(out, "view={i} status=zero").unwrap(),
                ViewStatus::Positive => writeln!(out, "view={i} status=positive").unwrap(),
                ViewStatus::Fail { witness: None } => {
                    writeln!(out, "view={i} status=fail").unwrap()
                }
                ViewStatus::Fail {
                    witness: Some((a, b)),
                } => writeln!(out, "view={i} status=fail witness=t^{a} r^{b}").unwrap(),
            }
        }
        writeln!(
            out,
            "summary pass={} tight={} strict={} failed={}",
            self.pass,
            self.tight_count(),
            self.strict_count(),
            self.failed_count()
        )
        .unwrap();
        out
    }
}
