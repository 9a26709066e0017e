//! Brute-force regeneration of small catalogues, used as an independent
//! check on the canonical-augmentation search.
//!
//! Instead of growing objects edge by edge, this enumerates every labelled
//! inner graph and every function from boundary vertices to colour
//! vertices, canonicalises each result, and collects the distinct forms.
//! Feasible for d <= 3 only, which is exactly its job.

use std::collections::BTreeSet;

use crate::graphs::{canonical_form, Role, SmallGraph};

use super::generate::build_simple_representation;

/// Set of canonical-form texts of every coloured view for degree d,
/// obtained without canonical augmentation.
pub fn brute_force_catalogue_forms(d: usize) -> BTreeSet<String> {
    assert!((1..=3).contains(&d), "brute force is for d <= 3");
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|a| ((a + 1)..d).map(move |b| (a, b)))
        .collect();
    let mut forms = BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut inner = SmallGraph::plain(d);
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                inner.add_edge(a, b);
            }
        }
        let skeleton = build_simple_representation(d, &inner).expect("d vertices");
        let boundary: Vec<usize> = skeleton.vertices_with_role(Role::Boundary).collect();
        let colours: Vec<usize> = skeleton.vertices_with_role(Role::Colour).collect();
        let b = boundary.len();

        // Odometer over all b^b colourings of the boundary.
        let mut assignment = vec![0usize; b];
        loop {
            let mut g = skeleton.clone();
            for (i, &bv) in boundary.iter().enumerate() {
                g.add_edge(bv, colours[assignment[i]]);
            }
            forms.insert(canonical_form(&g).to_text());

            let mut k = 0;
            loop {
                if k == b {
                    break;
                }
                assignment[k] += 1;
                if assignment[k] < b {
                    break;
                }
                assignment[k] = 0;
                k += 1;
            }
            if k == b {
                break;
            }
        }
        if b == 0 {
            // The loop above inserted the single boundaryless view and then
            // terminated via k == b == 0 after one pass.
            debug_assert!(forms.contains(&canonical_form(&skeleton).to_text()));
        }
    }
    forms
}

#[cfg(test)]
mod tests {
    use super::super::generate::generate_catalogue;
    use super::*;

    #[test]
    fn d1_single_view() {
        // One neighbour, no boundary: the single edge is the only view.
        assert_eq!(brute_force_catalogue_forms(1).len(), 1);
    }

    #[test]
    fn d2_matches_search() {
        let brute = brute_force_catalogue_forms(2);
        let cat = generate_catalogue(2).unwrap();
        let search: BTreeSet<String> = cat.views().iter().map(|v| v.rep().to_text()).collect();
        assert_eq!(brute, search);
        assert_eq!(brute.len(), 3);
    }
}
