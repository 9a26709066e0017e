//! Direct numeric evaluation of the coefficient data at a fixed integer q,
//! by enumerating all q^(d+1) colourings of the free vertices with no
//! pattern compression. Deliberately shares no code with the symbolic
//! pipeline so the two can check each other.

use crate::algebra::Rational;
use crate::localview::LocalView;

use super::partition::{partition_of_multiset, partitions_of};

/// Numeric values of Ztilde, the centre numerator, and the balance
/// numerators at a concrete (q, t0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectCoeffs {
    pub ztilde: Rational,
    pub centre: Rational,
    pub balance: Vec<Rational>,
}

/// Evaluates the coefficient data of a view by exhaustive enumeration.
/// Needs q at least the number of boundary colours, else the view cannot
/// occur with q colours at all.
pub fn direct_coefficients(view: &LocalView, q: usize, t0: &Rational) -> DirectCoeffs {
    let d = view.d();
    assert!(
        q >= view.colour_count(),
        "q must cover the boundary colours"
    );
    let m_max = view.closed_edge_count() + view.boundary_size();

    let shapes = partitions_of(d);
    let one_plus_t = Rational::from_integer(1.into()) + t0.clone();
    let mut powers = Vec::with_capacity(m_max + 1);
    let mut acc = Rational::from_integer(1.into());
    for _ in 0..=m_max {
        powers.push(acc.clone());
        acc *= one_plus_t.clone();
    }

    let zero = Rational::from_integer(0.into());
    let mut ztilde = zero.clone();
    let mut centre = zero.clone();
    let mut balance = vec![zero; shapes.len()];

    // Odometer over all maps from the d+1 free vertices to 1..=q.
    let mut colours = vec![1usize; d + 1];
    loop {
        let mut mono = 0usize;
        for i in 0..d {
            if colours[i + 1] == colours[0] {
                mono += 1;
            }
            for &c in &view.multisets()[i] {
                if colours[i + 1] == c {
                    mono += 1;
                }
            }
        }
        for &(a, b) in view.inner_edges() {
            if colours[a] == colours[b] {
                mono += 1;
            }
        }
        let weight = &powers[m_max - mono];

        ztilde += weight;
        let shared = (0..d).filter(|&i| colours[i + 1] == colours[0]).count();
        if shared > 0 {
            centre += weight * Rational::from_integer((shared as i64).into());
        }

        let shape_v = partition_of_multiset(&colours[1..=d]);
        let s_v = shapes.iter().position(|s| *s == shape_v).unwrap();
        balance[s_v] += weight * Rational::from_integer((d as i64).into());
        for i in 0..d {
            let mut seen: Vec<usize> = vec![colours[0]];
            for &(a, b) in view.inner_edges() {
                if a == i + 1 {
                    seen.push(colours[b]);
                } else if b == i + 1 {
                    seen.push(colours[a]);
                }
            }
            seen.extend(view.multisets()[i].iter().copied());
            let shape_u = partition_of_multiset(&seen);
            let s_u = shapes.iter().position(|s| *s == shape_u).unwrap();
            balance[s_u] -= weight;
        }

        // Advance the odometer.
        let mut k = 0;
        loop {
            if k == d + 1 {
                return DirectCoeffs {
                    ztilde,
                    centre,
                    balance,
                };
            }
            colours[k] += 1;
            if colours[k] <= q {
                break;
            }
            colours[k] = 1;
            k += 1;
        }
    }
}
