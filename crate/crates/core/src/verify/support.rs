//! Locating the reference views inside a catalogue: the three views that
//! occur in K_{4,4} and the boundaryless K_5 view.

use crate::coeffs::partitions_of;
use crate::localview::{Catalogue, LocalView};

use super::VerifyError;

/// The catalogue indices of the three K_{4,4} views, ordered by the
/// partition shape of the shared external colours: 3, 2+1, 1+1+1.
///
/// In K_{4,4} the observed vertex has no edges among its neighbours, and
/// every neighbour is adjacent to the same three externals, so each view
/// has an empty inner graph and four equal multisets whose shape is a
/// partition of 3.
pub fn k44_support_views(cat: &Catalogue) -> Result<[usize; 3], VerifyError> {
    if cat.d() != 4 {
        return Err(VerifyError::MismatchedInputs(format!(
            "K44 support views need a degree-4 catalogue, got d={}",
            cat.d()
        )));
    }
    let multisets: [[usize; 3]; 3] = [[1, 1, 1], [1, 1, 2], [1, 2, 3]];
    let shapes = partitions_of(3);
    let mut out = [0usize; 3];
    for (s, mult) in multisets.iter().enumerate() {
        let sets: Vec<Vec<usize>> = (0..4).map(|_| mult.to_vec()).collect();
        let view = LocalView::from_parts(4, &[], &sets)
            .map_err(|e| VerifyError::MismatchedInputs(format!("building support view: {e}")))?;
        out[s] = cat
            .index_of_rep(view.rep())
            .ok_or_else(|| VerifyError::SupportMissing(format!("external shape {}", shapes[s])))?;
    }
    Ok(out)
}

/// The catalogue index of the K_5 view: complete inner graph, no boundary.
pub fn k5_view_index(cat: &Catalogue) -> Result<usize, VerifyError> {
    if cat.d() != 4 {
        return Err(VerifyError::MismatchedInputs(format!(
            "the K5 view needs a degree-4 catalogue, got d={}",
            cat.d()
        )));
    }
    let inner: Vec<(usize, usize)> = (1..=4)
        .flat_map(|a| ((a + 1)..=4).map(move |b| (a, b)))
        .collect();
    let view = LocalView::from_parts(4, &inner, &[vec![], vec![], vec![], vec![]])
        .map_err(|e| VerifyError::MismatchedInputs(format!("building the K5 view: {e}")))?;
    cat.index_of_rep(view.rep())
        .ok_or_else(|| VerifyError::SupportMissing("complete inner view".to_string()))
}
