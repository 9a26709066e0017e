//! Aggregation of colour patterns into integer tables, and assembly of the
//! tables into exact polynomial coefficient vectors.
//!
//! The weight of a pattern factors through (mono, extras), and the balance
//! indicators are integers, so one pass over the patterns of a view
//! produces small integer tables from which the polynomials for all three
//! cases are assembled without revisiting the patterns.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::BiPoly;
use crate::localview::{Catalogue, LocalView};

use super::case::Case;
use super::colourings::{for_each_local_colouring, multiplicity};
use super::partition::partitions_of;
use super::records::{CoeffError, CoeffRecord, CoeffSet};

/// Case-independent pattern statistics for one view, indexed by the number
/// of monochromatic edges m and the number of extra colours j.
#[derive(Debug, Clone)]
pub struct ViewTables {
    /// Total number of view edges; the weight exponent is m_max - m.
    pub m_max: usize,
    /// count[m][j]: patterns with these statistics.
    pub count: Vec<Vec<i64>>,
    /// centre[m][j]: summed number of neighbours sharing the centre colour.
    pub centre: Vec<Vec<i64>>,
    /// balance[s][m][j]: summed d * [shape at centre = s] minus the number
    /// of neighbours whose own shape is s, where shapes index the
    /// partitions of d in standard order.
    pub balance: Vec<Vec<Vec<i64>>>,
}

/// Multiplicity profile of up to d+1 values, as a descending run-length
/// vector padded with zeros. Used to index partitions without allocating.
fn shape_profile(vals: &mut [usize]) -> [u8; 8] {
    vals.sort_unstable();
    let mut profile = [0u8; 8];
    let mut filled = 0;
    let mut run = 0u8;
    for i in 0..vals.len() {
        run += 1;
        if i + 1 == vals.len() || vals[i + 1] != vals[i] {
            profile[filled] = run;
            filled += 1;
            run = 0;
        }
    }
    profile[..filled].sort_unstable_by(|a, b| b.cmp(a));
    profile
}

/// One pass over all colour patterns of the view.
pub fn view_tables(view: &LocalView) -> ViewTables {
    let d = view.d();
    let m_max = view.closed_edge_count() + view.boundary_size();
    let shapes = partitions_of(d);
    let num_shapes = shapes.len();

    // Profile of each partition of d, for the leaf-side lookup.
    let shape_profiles: Vec<[u8; 8]> = shapes
        .iter()
        .map(|p| {
            let mut profile = [0u8; 8];
            for (i, &part) in p.parts().iter().enumerate() {
                profile[i] = part;
            }
            profile
        })
        .collect();
    let shape_index = |profile: [u8; 8]| -> usize {
        shape_profiles
            .iter()
            .position(|&p| p == profile)
            .expect("profile of d values is a partition of d")
    };

    let js = d + 2;
    let mut count = vec![vec![0i64; js]; m_max + 1];
    let mut centre = vec![vec![0i64; js]; m_max + 1];
    let mut balance = vec![vec![vec![0i64; js]; m_max + 1]; num_shapes];

    // Per neighbour: its inner neighbours (as colour indices into the
    // pattern buffer) and its fixed external colours.
    let mut inner_of: Vec<Vec<usize>> = vec![Vec::new(); d];
    for &(a, b) in view.inner_edges() {
        inner_of[a - 1].push(b);
        inner_of[b - 1].push(a);
    }
    let fixed_of: Vec<&[usize]> = view.multisets().iter().map(|set| set.as_slice()).collect();

    let mut scratch = [0usize; 8];
    for_each_local_colouring(view, |colours, extras, mono| {
        count[mono][extras] += 1;

        let centre_colour = colours[0];
        let mut shared = 0i64;
        for &c in &colours[1..] {
            if c == centre_colour {
                shared += 1;
            }
        }
        centre[mono][extras] += shared;

        // Shape seen by the centre: the colours of its d neighbours.
        scratch[..d].copy_from_slice(&colours[1..=d]);
        let s_v = shape_index(shape_profile(&mut scratch[..d]));
        balance[s_v][mono][extras] += d as i64;

        // Shape seen by each neighbour: the centre, its inner neighbours,
        // and its fixed externals, d values in all.
        for i in 0..d {
            scratch[0] = centre_colour;
            let mut len = 1;
            for &a in &inner_of[i] {
                scratch[len] = colours[a];
                len += 1;
            }
            for &c in fixed_of[i] {
                scratch[len] = c;
                len += 1;
            }
            debug_assert_eq!(len, d);
            let s_u = shape_index(shape_profile(&mut scratch[..len]));
            balance[s_u][mono][extras] -= 1;
        }
    });

    // The shape indicators sum to one at the centre and at each neighbour,
    // so the balance tables cancel cell by cell.
    for m in 0..=m_max {
        for j in 0..js {
            let total: i64 = (0..num_shapes).map(|s| balance[s][m][j]).sum();
            assert_eq!(total, 0, "balance tables must cancel at ({m}, {j})");
        }
    }

    ViewTables {
        m_max,
        count,
        centre,
        balance,
    }
}

fn assemble_poly(table: &[Vec<i64>], m_max: usize, ff: &[BiPoly]) -> BiPoly {
    let mut out = BiPoly::zero();
    for (m, row) in table.iter().enumerate() {
        let mut layer = BiPoly::zero();
        for (j, &count) in row.iter().enumerate() {
            if count != 0 {
                layer = &layer + &ff[j].scale(&BigInt::from(count));
            }
        }
        if !layer.is_zero() {
            out = &out + &(&layer * &BiPoly::one_plus_t_pow((m_max - m) as u32));
        }
    }
    out
}

/// Assembles the polynomial coefficient vector of a view for one case from
/// precomputed tables. The checks that would catch a corrupted table or a
/// broken weight convention run every time: the balance numerators must sum
/// to zero and the partition function must have non-negative coefficients
/// and specialise to q^(d+1) at t = 0.
pub fn assemble_coefficients(
    view: &LocalView,
    tables: &ViewTables,
    case: Case,
) -> Result<CoeffRecord, CoeffError> {
    let d = view.d();
    let q_fixed = view.colour_count();
    let ff: Vec<BiPoly> = (0..d + 2).map(|j| multiplicity(case, q_fixed, j)).collect();

    let ztilde = assemble_poly(&tables.count, tables.m_max, &ff);
    let centre = assemble_poly(&tables.centre, tables.m_max, &ff);
    let balance: Vec<BiPoly> = tables
        .balance
        .iter()
        .map(|table| assemble_poly(table, tables.m_max, &ff))
        .collect();

    CoeffRecord::new(case, d, ztilde, centre, balance)
}

/// Tables plus assembly in one call, for a single case.
pub fn coefficient_vectors(view: &LocalView, case: Case) -> Result<CoeffRecord, CoeffError> {
    let tables = view_tables(view);
    assemble_coefficients(view, &tables, case)
}

/// The full coefficient set of a catalogue for one case, views in
/// catalogue order.
pub fn compute_coeff_set(cat: &Catalogue, case: Case) -> Result<CoeffSet, CoeffError> {
    let records = cat
        .views()
        .par_iter()
        .map(|view| coefficient_vectors(view, case))
        .collect::<Result<Vec<_>, _>>()?;
    CoeffSet::new(case, cat.d(), cat.hash().to_string(), records)
}

/// Coefficient sets for all three cases in one pattern pass per view,
/// ordered as `Case::ALL`.
pub fn compute_all_coeff_sets(cat: &Catalogue) -> Result<Vec<CoeffSet>, CoeffError> {
    let per_view = cat
        .views()
        .par_iter()
        .map(|view| {
            let tables = view_tables(view);
            Case::ALL
                .iter()
                .map(|&case| assemble_coefficients(view, &tables, case))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<Vec<_>>, _>>()?;

    Case::ALL
        .iter()
        .enumerate()
        .map(|(i, &case)| {
            let records = per_view.iter().map(|recs| recs[i].clone()).collect();
            CoeffSet::new(case, cat.d(), cat.hash().to_string(), records)
        })
        .collect()
}
