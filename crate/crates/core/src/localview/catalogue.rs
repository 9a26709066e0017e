//! The catalogue: the complete ordered list of local views for one degree,
//! with a content hash and a plain-text file format.

use std::collections::HashMap;

use sha2::{Digest, Sha256};

use crate::graphs::SmallGraph;

use super::view::{LocalView, ViewError};

/// All local views for a fixed degree, sorted by (inner edge count,
/// canonical graph text) so the order is reproducible, with a SHA-256 hash
/// of the record block that downstream stages use to detect drift.
#[derive(Debug, Clone)]
pub struct Catalogue {
    d: usize,
    views: Vec<LocalView>,
    hash: String,
    index: HashMap<String, usize>,
}

impl Catalogue {
    /// Sorts the views, rejects duplicates, and computes the content hash.
    pub fn new(d: usize, mut views: Vec<LocalView>) -> Result<Catalogue, ViewError> {
        for v in &views {
            if v.d() != d {
                return Err(ViewError::BadRecord(format!(
                    "view of degree {} in a degree-{} catalogue",
                    v.d(),
                    d
                )));
            }
        }
        views.sort_by(|a, b| {
            (a.inner_edge_count(), a.rep().to_text())
                .cmp(&(b.inner_edge_count(), b.rep().to_text()))
        });
        let mut index = HashMap::with_capacity(views.len());
        for (i, v) in views.iter().enumerate() {
            if index.insert(v.rep().to_text(), i).is_some() {
                return Err(ViewError::BadRecord("duplicate view".to_string()));
            }
        }
        let hash = hash_records(&views);
        Ok(Catalogue {
            d,
            views,
            hash,
            index,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn views(&self) -> &[LocalView] {
        &self.views
    }

    pub fn len(&self) -> usize {
        self.views.len()
    }

    pub fn is_empty(&self) -> bool {
        self.views.is_empty()
    }

    /// Hex SHA-256 of the record block.
    pub fn hash(&self) -> &str {
        &self.hash
    }

    /// Position of the view with this canonical representation, if present.
    pub fn index_of_rep(&self, rep: &SmallGraph) -> Option<usize> {
        self.index.get(&rep.to_text()).copied()
    }

    /// Serialises the catalogue:
    /// a `LVC1 d=<d> count=<n> hash=<hex>` header, a blank line, then the
    /// view records separated by blank lines.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "LVC1 d={} count={} hash={}\n",
            self.d,
            self.views.len(),
            self.hash
        );
        for v in &self.views {
            out.push('\n');
            out.push_str(&v.record_text());
        }
        out
    }

    /// Parses and re-verifies a serialised catalogue: every record is
    /// rebuilt and re-canonicalised, the count and sort order are checked,
    /// and the recomputed hash must equal the header hash.
    pub fn from_text(text: &str) -> Result<Catalogue, ViewError> {
        let bad = |msg: String| ViewError::BadRecord(msg);
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("empty file".into()))?;
        let mut d = None;
        let mut count = None;
        let mut hash = None;
        let mut parts = header.split_whitespace();
        if parts.next() != Some("LVC1") {
            return Err(bad("missing LVC1 magic".into()));
        }
        for part in parts {
            if let Some(v) = part.strip_prefix("d=") {
                d = Some(v.parse::<usize>().map_err(|_| bad("bad d".into()))?);
            } else if let Some(v) = part.strip_prefix("count=") {
                count = Some(v.parse::<usize>().map_err(|_| bad("bad count".into()))?);
            } else if let Some(v) = part.strip_prefix("hash=") {
                hash = Some(v.to_string());
            } else {
                return Err(bad(format!("unrecognised header field {part}")));
            }
        }
        let d = d.ok_or_else(|| bad("header missing d".into()))?;
        let count = count.ok_or_else(|| bad("header missing count".into()))?;
        let declared_hash = hash.ok_or_else(|| bad("header missing hash".into()))?;

        let body: String = text.splitn(2, '\n').nth(1).unwrap_or("").to_string();
        let mut views = Vec::new();
        for chunk in body.split("\n\n") {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            views.push(LocalView::parse_record(d, chunk)?);
        }
        if views.len() != count {
            return Err(bad(format!(
                "header count {count} but {} records",
                views.len()
            )));
        }
        let sorted_ok = views.windows(2).all(|w| {
            (w[0].inner_edge_count(), w[0].rep().to_text())
                < (w[1].inner_edge_count(), w[1].rep().to_text())
        });
        if !sorted_ok {
            return Err(bad("records out of order".into()));
        }
        let cat = Catalogue::new(d, views)?;
        if cat.hash != declared_hash {
            return Err(bad(format!(
                "hash mismatch: header {declared_hash}, recomputed {}",
                cat.hash
            )));
        }
        Ok(cat)
    }
}

fn hash_records(views: &[LocalView]) -> String {
    let mut hasher = Sha256::new();
    for v in views {
        hasher.update(v.record_text().as_bytes());
        hasher.update(b"\n");
    }
    let digest = hasher.finalize();
    let mut out = String::with_capacity(64);
    for byte in digest {
        out.push_str(&format!("{byte:02x}"));
    }
    out
}
