//! Exact reference models: the Potts partition function and energy of
//! K_{4,4} and K_5, computed by whole-graph enumeration over colour-class
//! patterns, independently of the per-view pipeline.

use num_bigint::BigInt;

use crate::algebra::{BiPoly, RatFn};
use crate::coeffs::{multiplicity, partition_of_multiset, partitions_of, Case};

use super::VerifyError;

/// Walks all colour-class patterns of n vertices: maps to colours numbered
/// by first appearance. Calls f with the colour vector and the number of
/// classes used.
fn for_each_class_pattern<F: FnMut(&[usize], usize)>(n: usize, mut f: F) {
    fn rec<F: FnMut(&[usize], usize)>(
        level: usize,
        used: usize,
        colours: &mut Vec<usize>,
        f: &mut F,
    ) {
        if level == colours.len() {
            f(colours, used);
            return;
        }
        for c in 1..=used + 1 {
            colours[level] = c;
            rec(level + 1, used.max(c), colours, f);
        }
    }
    let mut colours = vec![0usize; n];
    rec(0, 0, &mut colours, &mut f);
}

/// Shared whole-graph accumulation: the shifted partition function, the
/// total-energy numerator, and one numerator per class of colourings as
/// picked out by `classify`.
fn graph_sums<C: Fn(&[usize]) -> usize>(
    n: usize,
    edges: &[(usize, usize)],
    case: Case,
    classes: usize,
    classify: C,
) -> (BiPoly, BiPoly, Vec<BiPoly>) {
    let m_max = edges.len();
    let mut ztilde = BiPoly::zero();
    let mut energy = BiPoly::zero();
    let mut class_nums = vec![BiPoly::zero(); classes];

    for_each_class_pattern(n, |colours, used| {
        let mono = edges
            .iter()
            .filter(|&&(a, b)| colours[a] == colours[b])
            .count();
        // Patterns have no fixed colours, so the weight is the plain
        // falling factorial q (q-1) ... (q-used+1).
        let ff = multiplicity(case, 0, used);
        let w = &ff * &BiPoly::one_plus_t_pow((m_max - mono) as u32);
        ztilde = &ztilde + &w;
        if mono > 0 {
            energy = &energy + &w.scale(&BigInt::from(mono as i64));
        }
        let class = classify(colours);
        class_nums[class] = &class_nums[class] + &w;
    });

    (ztilde, energy, class_nums)
}

/// Reference data for K_{4,4}: vertex 0 is the observed vertex, vertices
/// 1..=3 are the rest of its side (the externals of its view), 4..=7 the
/// other side. The view probabilities are classified by the partition
/// shape of the three external colours, in partitions-of-3 order.
#[derive(Debug, Clone)]
pub struct K44Reference {
    case: Case,
    ztilde: BiPoly,
    energy: BiPoly,
    pstar_num: Vec<BiPoly>,
}

impl K44Reference {
    pub fn case(&self) -> Case {
        self.case
    }

    pub fn ztilde(&self) -> &BiPoly {
        &self.ztilde
    }

    /// Numerator of the expected number of monochromatic edges.
    pub fn energy(&self) -> &BiPoly {
        &self.energy
    }

    /// The energy per vertex: energy / (8 Ztilde).
    pub fn u_star(&self) -> Result<RatFn, VerifyError> {
        Ok(RatFn::new(
            self.energy.clone(),
            self.ztilde.scale(&BigInt::from(8)),
        )?)
    }

    /// Probability that the view at vertex 0 has external shape s
    /// (partitions of 3 in standard order), as a rational function.
    pub fn pstar(&self, s: usize) -> Result<RatFn, VerifyError> {
        Ok(RatFn::new(self.pstar_num[s].clone(), self.ztilde.clone())?)
    }

    /// Raw numerator of pstar over the common denominator Ztilde.
    pub fn pstar_num(&self, s: usize) -> &BiPoly {
        &self.pstar_num[s]
    }
}

/// Builds the K_{4,4} reference for a case by exhaustive enumeration of
/// the Bell(8) colour-class patterns.
pub fn k44_reference(case: Case) -> K44Reference {
    let mut edges = Vec::new();
    for a in 0..4 {
        for b in 4..8 {
            edges.push((a, b));
        }
    }
    let shapes = partitions_of(3);
    let (ztilde, energy, pstar_num) = graph_sums(8, &edges, case, shapes.len(), |colours| {
        let shape = partition_of_multiset(&colours[1..4]);
        shapes.iter().position(|s| *s == shape).unwrap()
    });

    // The shape classes partition all colourings.
    let mut total = BiPoly::zero();
    for p in &pstar_num {
        total = &total + p;
    }
    assert_eq!(total, ztilde, "shape classes must partition the colourings");

    K44Reference {
        case,
        ztilde,
        energy,
        pstar_num,
    }
}

/// Reference data for K_5.
#[derive(Debug, Clone)]
pub struct K5Reference {
    case: Case,
    ztilde: BiPoly,
    energy: BiPoly,
}

impl K5Reference {
    pub fn case(&self) -> Case {
        self.case
    }

    pub fn ztilde(&self) -> &BiPoly {
        &self.ztilde
    }

    pub fn energy(&self) -> &BiPoly {
        &self.energy
    }

    /// The energy per vertex: energy / (5 Ztilde).
    pub fn u_star(&self) -> Result<RatFn, VerifyError> {
        Ok(RatFn::new(
            self.energy.clone(),
            self.ztilde.scale(&BigInt::from(5)),
        )?)
    }
}

/// Builds the K_5 reference by enumeration of the Bell(5) patterns.
pub fn k5_reference(case: Case) -> K5Reference {
    let mut edges = Vec::new();
    for a in 0..5 {
        for b in (a + 1)..5 {
            edges.push((a, b));
        }
    }
    let (ztilde, energy, _) = graph_sums(5, &edges, case, 1, |_| 0);
    K5Reference {
        case,
        ztilde,
        energy,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;

    #[test]
    fn k44_census_at_t_zero() {
        // At t = 0 every weight is 1, so Ztilde counts all q^8 colourings;
        // q itself comes from evaluating the case's colour polynomial.
        for case in Case::ALL {
            let re = k44_reference(case);
            for r0 in [rational(0, 1), rational(1, 1)] {
                let q = case.q_poly().eval(&rational(0, 1), &r0);
                assert_eq!(re.ztilde().eval(&rational(0, 1), &r0), q.pow(8));
            }
        }
    }

    #[test]
    fn k5_census_at_t_zero() {
        let re = k5_reference(Case::MaxQGe5);
        assert_eq!(
            re.ztilde().eval(&rational(0, 1), &rational(0, 1)),
            rational(5i64.pow(5), 1)
        );
        assert_eq!(
            re.ztilde().eval(&rational(0, 1), &rational(2, 1)),
            rational(7i64.pow(5), 1)
        );
    }

    #[test]
    fn energies_are_small_at_large_t() {
        // Larger t penalises monochromatic edges, so the energy per vertex
        // sits strictly between 0 and d/2 = 2 at any finite t > 0.
        let t0 = rational(3, 1);
        let r0 = rational(0, 1);
        for u in [
            k44_reference(Case::MinQ5).u_star().unwrap(),
            k5_reference(Case::MaxQGe5).u_star().unwrap(),
        ] {
            let val = u.eval(&t0, &r0).unwrap();
            assert!(val > rational(0, 1));
            assert!(val < rational(2, 1));
        }
    }

    #[test]
    fn k44_energy_value_at_t0_is_two_over_q() {
        // At t = 0 the model is uniform: each edge is monochromatic with
        // probability 1/q, so U = 16/(8q) = 2/q.
        for case in Case::ALL {
            let re = k44_reference(case);
            let u = re.u_star().unwrap();
            for r0 in [rational(0, 1), rational(3, 1)] {
                let q = case.q_poly().eval(&rational(0, 1), &r0);
                assert_eq!(u.eval(&rational(0, 1), &r0).unwrap(), rational(2, 1) / q);
            }
        }
    }

    #[test]
    fn k5_energy_value_at_t0_is_two_over_q() {
        let re = k5_reference(Case::MaxQGe5);
        let u = re.u_star().unwrap();
        assert_eq!(
            u.eval(&rational(0, 1), &rational(0, 1)).unwrap(),
            rational(2, 5)
        );
    }

    #[test]
    fn pstar_sums_to_one() {
        let re = k44_reference(Case::MinQ5);
        let mut total = RatFn::zero();
        for s in 0..3 {
            total = total.add(&re.pstar(s).unwrap());
        }
        assert!(total.eq_value(&RatFn::one()));
    }
}
