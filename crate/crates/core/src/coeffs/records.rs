//! Validated coefficient records and their file format.

use std::fmt;

use crate::algebra::{parse_poly_block, poly_to_text, BiPoly, SignReport};

use super::case::Case;
use super::partition::partitions_of;

/// Errors raised while building or reading coefficient data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffError {
    /// The partition function had a negative coefficient, which would break
    /// every sign-based argument downstream.
    NegativePartitionFunction { t_exp: u32, r_exp: u32 },
    /// The balance numerators of a view do not sum to zero.
    UnbalancedRecord,
    /// The partition function does not specialise to q^(d+1) at t = 0.
    WrongCensus,
    /// A serialised record or set could not be parsed.
    BadFile(String),
}

impl fmt::Display for CoeffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffError::NegativePartitionFunction { t_exp, r_exp } => write!(
                f,
                "partition function has a negative coefficient at t^{t_exp} r^{r_exp}"
            ),
            CoeffError::UnbalancedRecord => {
                write!(f, "balance numerators do not sum to zero")
            }
            CoeffError::WrongCensus => {
                write!(f, "partition function does not count q^(d+1) maps at t = 0")
            }
            CoeffError::BadFile(msg) => write!(f, "bad coefficient file: {msg}"),
        }
    }
}

impl std::error::Error for CoeffError {}

/// The exact LP data of one view for one case. All entries are polynomials
/// in t and r; the rational constraint coefficients are recovered as
/// centre / (2 Ztilde) and balance_s / (d Ztilde).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffRecord {
    case: Case,
    d: usize,
    ztilde: BiPoly,
    centre: BiPoly,
    balance: Vec<BiPoly>,
}

impl CoeffRecord {
    /// Validates and wraps the raw polynomials. Checks, in order: the
    /// balance vector length, the zero sum of the balance numerators, the
    /// coefficient signs of the partition function, and its t = 0
    /// specialisation q^(d+1).
    pub fn new(
        case: Case,
        d: usize,
        ztilde: BiPoly,
        centre: BiPoly,
        balance: Vec<BiPoly>,
    ) -> Result<CoeffRecord, CoeffError> {
        if balance.len() != partitions_of(d).len() {
            return Err(CoeffError::BadFile(format!(
                "expected {} balance numerators, got {}",
                partitions_of(d).len(),
                balance.len()
            )));
        }
        let mut sum = BiPoly::zero();
        for b in &balance {
            sum = &sum + b;
        }
        if !sum.is_zero() {
            return Err(CoeffError::UnbalancedRecord);
        }
        if let SignReport::HasNegative { witness } = ztilde.sign_report() {
            return Err(CoeffError::NegativePartitionFunction {
                t_exp: witness.0,
                r_exp: witness.1,
            });
        }
        let at_t0 = BiPoly::from_terms(
            ztilde
                .terms()
                .filter(|((t_exp, _), _)| *t_exp == 0)
                .map(|(&(_, r_exp), c)| ((0, r_exp), c.clone())),
        );
        if at_t0 != case.q_poly().pow(d as u32 + 1) {
            return Err(CoeffError::WrongCensus);
        }
        Ok(CoeffRecord {
            case,
            d,
            ztilde,
            centre,
            balance,
        })
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The shifted partition function (1+t)^m_max Z.
    pub fn ztilde(&self) -> &BiPoly {
        &self.ztilde
    }

    /// Numerator of the expected number of neighbours sharing the centre
    /// colour; the energy coefficient is centre / (2 Ztilde).
    pub fn centre(&self) -> &BiPoly {
        &self.centre
    }

    /// Numerator of the s-th balance constraint (partitions of d in
    /// standard order); the coefficient is balance(s) / (d Ztilde).
    pub fn balance(&self, s: usize) -> &BiPoly {
        &self.balance[s]
    }

    pub fn balance_count(&self) -> usize {
        self.balance.len()
    }
}

/// All coefficient records for one case, aligned with catalogue order and
/// tied to the catalogue by its hash.
#[derive(Debug, Clone)]
pub struct CoeffSet {
    case: Case,
    d: usize,
    catalogue_hash: String,
    records: Vec<CoeffRecord>,
}

impl CoeffSet {
    pub fn new(
        case: Case,
        d: usize,
        catalogue_hash: String,
        records: Vec<CoeffRecord>,
    ) -> Result<CoeffSet, CoeffError> {
        for rec in &records {
            if rec.case() != case || rec.d() != d {
                return Err(CoeffError::BadFile(
                    "record case or degree does not match the set".to_string(),
                ));
            }
        }
        Ok(CoeffSet {
            case,
            d,
            catalogue_hash,
            records,
        })
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn catalogue_hash(&self) -> &str {
        &self.catalogue_hash
    }

    pub fn records(&self) -> &[CoeffRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Serialises the set: a header line, then one block per view in
    /// catalogue order. Within a block each polynomial appears under a
    /// label line; balance numerators are labelled by their partition.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "PCF1 case={} d={} count={} catalogue={}\n",
            self.case.label(),
            self.d,
            self.records.len(),
            self.catalogue_hash
        );
        let shapes = partitions_of(self.d);
        for (i, rec) in self.records.iter().enumerate() {
            out.push_str(&format!("\nview {i}\n"));
            out.push_str("ztilde:\n");
            out.push_str(&poly_to_text(&rec.ztilde));
            out.push_str("centre:\n");
            out.push_str(&poly_to_text(&rec.centre));
            for (s, shape) in shapes.iter().enumerate() {
                out.push_str(&format!("balance {shape}:\n"));
                out.push_str(&poly_to_text(&rec.balance[s]));
            }
        }
        out
    }

    /// Parses a serialised set, re-running every record-level check.
    pub fn from_text(text: &str) -> Result<CoeffSet, CoeffError> {
        let bad = |msg: String| CoeffError::BadFile(msg);
        let mut lines = text.lines().peekable();
        let header = lines.next().ok_or_else(|| bad("empty file".into()))?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("PCF1") {
            return Err(bad("missing PCF1 magic".into()));
        }
        let (mut case, mut d, mut count, mut catalogue) = (None, None, None, None);
        for part in parts {
            if let Some(v) = part.strip_prefix("case=") {
                case = Case::from_label(v);
                if case.is_none() {
                    return Err(bad(format!("unknown case {v}")));
                }
            } else if let Some(v) = part.strip_prefix("d=") {
                d = v.parse::<usize>().ok();
            } else if let Some(v) = part.strip_prefix("count=") {
                count = v.parse::<usize>().ok();
            } else if let Some(v) = part.strip_prefix("catalogue=") {
                catalogue = Some(v.to_string());
            } else {
                return Err(bad(format!("unrecognised header field {part}")));
            }
        }
        let case = case.ok_or_else(|| bad("header missing case".into()))?;
        let d = d.ok_or_else(|| bad("header missing d".into()))?;
        let count = count.ok_or_else(|| bad("header missing count".into()))?;
        let catalogue = catalogue.ok_or_else(|| bad("header missing catalogue".into()))?;

        let shapes = partitions_of(d);
        let expected_labels: Vec<String> = std::iter::once("ztilde".to_string())
            .chain(std::iter::once("centre".to_string()))
            .chain(shapes.iter().map(|p| format!("balance {p}")))
            .collect();

        let mut records = Vec::with_capacity(count);
        // Cursor state: the current view block's polynomials in label order.
        let mut current: Option<(usize, Vec<String>, Vec<String>)> = None;

        let flush = |current: &mut Option<(usize, Vec<String>, Vec<String>)>,
                     records: &mut Vec<CoeffRecord>|
         -> Result<(), CoeffError> {
            if let Some((index, labels, bodies)) = current.take() {
                if index != records.len() {
                    return Err(CoeffError::BadFile(format!(
                        "view {index} out of order, expected {}",
                        records.len()
                    )));
                }
                if labels != expected_labels {
                    return Err(CoeffError::BadFile(format!(
                        "view {index} has sections {labels:?}"
                    )));
                }
                let mut polys = Vec::with_capacity(bodies.len());
                for body in &bodies {
                    let p = parse_poly_block(body)
                        .map_err(|e| CoeffError::BadFile(format!("view {index}: {e}")))?;
                    polys.push(p);
                }
                let balance = polys.split_off(2);
                let centre = polys.pop().expect("two fixed sections");
                let ztilde = polys.pop().expect("two fixed sections");
                let rec = CoeffRecord::new(case, d, ztilde, centre, balance)?;
                records.push(rec);
            }
            Ok(())
        };

        for line in lines {
            let line = line.trim_end();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("view ") {
                flush(&mut current, &mut records)?;
                let index: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| bad(format!("bad view index {rest}")))?;
                current = Some((index, Vec::new(), Vec::new()));
            } else if let Some(label) = line.strip_suffix(':') {
                let (_, labels, bodies) = current
                    .as_mut()
                    .ok_or_else(|| bad(format!("section {label} outside a view block")))?;
                labels.push(label.to_string());
                bodies.push(String::new());
            } else {
                let (_, _, bodies) = current
                    .as_mut()
                    .ok_or_else(|| bad(format!("stray line {line}")))?;
                let body = bodies
                    .last_mut()
                    .ok_or_else(|| bad(format!("term line before any section: {line}")))?;
                body.push_str(line);
                body.push('\n');
            }
        }
        flush(&mut current, &mut records)?;

        if records.len() != count {
            return Err(bad(format!(
                "header count {count} but {} view blocks",
                records.len()
            )));
        }
        CoeffSet::new(case, d, catalogue, records)
    }
}

#[cfg(test)]
mod tests {
    use super::super::tables::coefficient_vectors;
    use super::*;
    use crate::localview::LocalView;

    fn sample_records(case: Case) -> Vec<CoeffRecord> {
        let views = [
            LocalView::from_parts(2, &[(1, 2)], &[vec![], vec![]]).unwrap(),
            LocalView::from_parts(2, &[], &[vec![1], vec![1]]).unwrap(),
            LocalView::from_parts(2, &[], &[vec![1], vec![2]]).unwrap(),
        ];
        views
            .iter()
            .map(|v| coefficient_vectors(v, case).unwrap())
            .collect()
    }

    #[test]
    fn set_round_trip() {
        for case in Case::ALL {
            let records = sample_records(case);
            let set = CoeffSet::new(case, 2, "abc123".to_string(), records).unwrap();
            let text = set.to_text();
            let back = CoeffSet::from_text(&text).unwrap();
            assert_eq!(back.case(), case);
            assert_eq!(back.len(), 3);
            assert_eq!(back.catalogue_hash(), "abc123");
            assert_eq!(back.to_text(), text);
            for (a, b) in back.records().iter().zip(set.records()) {
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn tampered_balance_is_rejected() {
        let records = sample_records(Case::MinQGe6);
        let set = CoeffSet::new(Case::MinQGe6, 2, "abc".to_string(), records).unwrap();
        let text = set.to_text();
        // Flip a digit in some balance coefficient: the zero-sum check
        // trips on load.
        let marker = "balance 2:\n";
        let pos = text.find(marker).unwrap() + marker.len();
        let line_end = text[pos..].find('\n').unwrap() + pos;
        let line = &text[pos..line_end];
        let tampered_line = if line.ends_with('1') {
            format!("{}2", &line[..line.len() - 1])
        } else {
            format!("{}1", &line[..line.len() - 1])
        };
        let tampered = format!("{}{}{}", &text[..pos], tampered_line, &text[line_end..]);
        let err = CoeffSet::from_text(&tampered).unwrap_err();
        assert!(
            matches!(err, CoeffError::UnbalancedRecord | CoeffError::BadFile(_)),
            "got {err:?}"
        );
    }

    #[test]
    fn record_rejects_negative_ztilde() {
        let err = CoeffRecord::new(
            Case::MinQ5,
            2,
            crate::algebra::parse_poly_expr("125 - t").unwrap(),
            BiPoly::zero(),
            vec![BiPoly::zero(), BiPoly::zero()],
        )
        .unwrap_err();
        assert!(matches!(err, CoeffError::NegativePartitionFunction { .. }));
    }

    #[test]
    fn record_rejects_wrong_census() {
        let err = CoeffRecord::new(
            Case::MinQ5,
            2,
            BiPoly::constant(7),
            BiPoly::zero(),
            vec![BiPoly::zero(), BiPoly::zero()],
        )
        .unwrap_err();
        assert_eq!(err, CoeffError::WrongCensus);
    }
}
