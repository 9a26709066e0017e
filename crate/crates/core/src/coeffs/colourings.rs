//! Enumeration of colour patterns on the free vertices of a view.
//!
//! The free vertices are the centre and the d neighbours. A pattern assigns
//! each one either a boundary colour (1..=q_L) or an extra colour; extra
//! colours are unnamed, so they appear as q_L+1, q_L+2, ... in order of
//! first appearance. Every concrete colouring with q colours arises from
//! exactly one pattern by substituting distinct actual colours for the
//! extras, which is where the falling-factorial multiplicity comes from.

use crate::algebra::BiPoly;
use crate::localview::LocalView;

use super::case::Case;

/// One colour pattern: the colours of the centre (index 0) and of the
/// neighbours (indices 1..=d), how many extra colours it uses, and how many
/// view edges it makes monochromatic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouringPattern {
    pub colours: Vec<usize>,
    pub extras: usize,
    pub mono: usize,
}

/// Walks every colour pattern of the view, calling
/// `f(colours, extras, mono)` once per pattern. `colours` is a scratch
/// buffer, valid only during the call.
pub(crate) fn for_each_local_colouring<F: FnMut(&[usize], usize, usize)>(
    view: &LocalView,
    mut f: F,
) {
    let d = view.d();
    let q_fixed = view.colour_count();

    // Per neighbour: how many of its fixed boundary colours equal c.
    let fixed_counts: Vec<Vec<usize>> = view
        .multisets()
        .iter()
        .map(|set| {
            let mut counts = vec![0usize; q_fixed + 1];
            for &c in set {
                counts[c] += 1;
            }
            counts
        })
        .collect();
    // Per neighbour: the earlier neighbours it is joined to.
    let mut earlier_inner: Vec<Vec<usize>> = vec![Vec::new(); d];
    for &(a, b) in view.inner_edges() {
        let (lo, hi) = (a.min(b), a.max(b));
        earlier_inner[hi - 1].push(lo);
    }

    let mut colours = vec![0usize; d + 1];
    walk(
        0,
        q_fixed,
        0,
        0,
        &mut colours,
        &fixed_counts,
        &earlier_inner,
        &mut f,
    );
}

#[allow(clippy::too_many_arguments)]
fn walk<F: FnMut(&[usize], usize, usize)>(
    level: usize,
    q_fixed: usize,
    extras: usize,
    mono: usize,
    colours: &mut Vec<usize>,
    fixed_counts: &[Vec<usize>],
    earlier_inner: &[Vec<usize>],
    f: &mut F,
) {
    let d = fixed_counts.len();
    if level == d + 1 {
        f(colours, extras, mono);
        return;
    }
    // Old colours, already-seen extras, and one fresh extra.
    for c in 1..=(q_fixed + extras + 1) {
        let mut delta = 0usize;
        if level > 0 {
            let i = level - 1;
            if colours[0] == c {
                delta += 1;
            }
            for &a in &earlier_inner[i] {
                if colours[a] == c {
                    delta += 1;
                }
            }
            if c <= q_fixed {
                delta += fixed_counts[i][c];
            }
        }
        let new_extras = extras + usize::from(c == q_fixed + extras + 1);
        colours[level] = c;
        walk(
            level + 1,
            q_fixed,
            new_extras,
            mono + delta,
            colours,
            fixed_counts,
            earlier_inner,
            f,
        );
    }
    colours[level] = 0;
}

/// Materialised pattern list, ordered as the walker visits them.
pub fn enumerate_local_colourings(view: &LocalView) -> Vec<ColouringPattern> {
    let mut out = Vec::new();
    for_each_local_colouring(view, |colours, extras, mono| {
        out.push(ColouringPattern {
            colours: colours.to_vec(),
            extras,
            mono,
        });
    });
    out
}

/// Number of concrete colourings represented by a pattern with the given
/// number of extras, as a polynomial in r: the extras must take distinct
/// colours outside the q_fixed boundary colours, in order, giving the
/// falling factorial (q - q_fixed)(q - q_fixed - 1)...(q - q_fixed - extras + 1).
pub fn multiplicity(case: Case, q_fixed: usize, extras: usize) -> BiPoly {
    let q = case.q_poly();
    let mut out = BiPoly::one();
    for i in 0..extras {
        let factor = &q - &BiPoly::constant((q_fixed + i) as i64);
        out = &out * &factor;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;

    fn triangle_view() -> LocalView {
        LocalView::from_parts(2, &[(1, 2)], &[vec![], vec![]]).unwrap()
    }

    #[test]
    fn boundaryless_patterns_are_set_partitions() {
        // Three free vertices, no fixed colours: Bell(3) = 5 patterns.
        let patterns = enumerate_local_colourings(&triangle_view());
        assert_eq!(patterns.len(), 5);
        // All view edges monochromatic only in the all-equal pattern.
        let full: Vec<_> = patterns.iter().filter(|p| p.mono == 3).collect();
        assert_eq!(full.len(), 1);
        assert_eq!(full[0].colours, vec![1, 1, 1]);
        assert_eq!(full[0].extras, 1);
        // The rainbow pattern misses every edge.
        let rainbow: Vec<_> = patterns.iter().filter(|p| p.mono == 0).collect();
        assert_eq!(rainbow.len(), 1);
        assert_eq!(rainbow[0].colours, vec![1, 2, 3]);
    }

    #[test]
    fn k5_view_has_bell5_patterns() {
        let view = LocalView::from_parts(
            4,
            &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
            &[vec![], vec![], vec![], vec![]],
        )
        .unwrap();
        assert_eq!(enumerate_local_colourings(&view).len(), 52);
    }

    #[test]
    fn fixed_colours_enter_mono_counts() {
        // d = 2, no inner edge, boundary colours equal: q_fixed = 1.
        let view = LocalView::from_parts(2, &[], &[vec![1], vec![1]]).unwrap();
        let patterns = enumerate_local_colourings(&view);
        // Sum over vertex subsets taking old colours: C(3,k) 1^k Bell(3-k).
        assert_eq!(patterns.len(), 15);
        // Pattern (1, 1, 1): centre edges mono (2) plus both pendants (2).
        let all_old: Vec<_> = patterns.iter().filter(|p| p.colours == [1, 1, 1]).collect();
        assert_eq!(all_old[0].mono, 4);
        assert_eq!(all_old[0].extras, 0);
    }

    #[test]
    fn multiplicities() {
        assert!(multiplicity(Case::MinQGe6, 3, 0).is_one());
        // Two extras over 2 fixed colours with q = r + 6: (r+4)(r+3).
        let m = multiplicity(Case::MinQGe6, 2, 2);
        let expected = crate::algebra::parse_poly_expr("(r+4)*(r+3)").unwrap();
        assert_eq!(m, expected);
        // At q = 5 exactly: 5 - 3 - 0 = 2, then 1.
        let m = multiplicity(Case::MinQ5, 3, 2);
        assert_eq!(m, BiPoly::constant(2));
    }

    #[test]
    fn patterns_with_multiplicity_count_all_maps() {
        // Substituting extras recovers exactly the q^(d+1) raw colourings.
        for (view, d) in [
            (triangle_view(), 2usize),
            (
                LocalView::from_parts(2, &[], &[vec![1], vec![2]]).unwrap(),
                2,
            ),
            (
                LocalView::from_parts(3, &[(1, 2)], &[vec![1], vec![2], vec![3, 3]]).unwrap(),
                3,
            ),
        ] {
            for (case, q) in [(Case::MinQ5, 5i64), (Case::MinQGe6, 8), (Case::MaxQGe5, 6)] {
                let r = rational(q - case.base_q(), 1);
                let zero = rational(0, 1);
                let total: crate::algebra::Rational = enumerate_local_colourings(&view)
                    .iter()
                    .map(|p| multiplicity(case, view.colour_count(), p.extras).eval(&zero, &r))
                    .sum();
                assert_eq!(total, rational(q.pow(d as u32 + 1), 1));
            }
        }
    }
}
