//! Fast internal consistency checks, meant to be run before trusting the
//! main pipeline on a new machine or after a toolchain change.
//!
//! Each step either reproduces a result with an independent method or
//! deliberately corrupts an input and demands rejection. Steps print one
//! `ok` line each; the first failure is reported and the run fails.

use std::time::Instant;

use anyhow::Result;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use potts_core::algebra::rational;
use potts_core::coeffs::{compute_coeff_set, direct_coefficients, Case};
use potts_core::graphs::{
    aut_order_brute, canonical_form, canonicalize, Permutation, Role, SmallGraph,
};
use potts_core::localview::{brute_force_catalogue_forms, generate_catalogue, Catalogue};
use potts_core::verify::{
    check_k44_feasibility, multiplier_source, parse_multiplier, positivity_multiplier,
};

use crate::cache::Cache;

pub fn run(cache: &Cache) -> Result<bool> {
    let steps: &[(&str, fn(&Cache) -> Result<(), String>)] = &[
        ("small-catalogues", small_catalogues),
        ("canonical-labelling", canonical_labelling),
        ("symbolic-vs-direct", symbolic_vs_direct),
        ("k44-feasibility", k44_feasibility),
        ("corrupt-catalogue-detected", corrupt_catalogue_detected),
        ("tampered-multiplier-rejected", tampered_multiplier_rejected),
    ];
    for (name, step) in steps {
        let start = Instant::now();
        match step(cache) {
            Ok(()) => println!("ok {name} ({:.1}s)", start.elapsed().as_secs_f64()),
            Err(msg) => {
                println!("FAILED {name}: {msg}");
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The degree-2 and degree-3 catalogues must match an enumeration that
/// uses no canonical augmentation at all.
fn small_catalogues(_cache: &Cache) -> Result<(), String> {
    for d in [2usize, 3] {
        let brute = brute_force_catalogue_forms(d);
        let cat = generate_catalogue(d).map_err(|e| e.to_string())?;
        let search: std::collections::BTreeSet<String> =
            cat.views().iter().map(|v| v.rep().to_text()).collect();
        if search.len() != cat.len() {
            return Err(format!("duplicate views in the degree-{d} catalogue"));
        }
        if brute != search {
            return Err(format!(
                "degree-{d} catalogue has {} views, brute force found {}",
                search.len(),
                brute.len()
            ));
        }
    }
    Ok(())
}

fn random_graph(rng: &mut StdRng, n: usize, edge_prob: f64) -> SmallGraph {
    let palette = [
        Role::Centre,
        Role::Neighbour,
        Role::Boundary,
        Role::Colour,
        Role::Plain,
    ];
    let roles = (0..n)
        .map(|_| palette[rng.gen_range(0..palette.len())])
        .collect();
    let mut g = SmallGraph::with_roles(roles);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(edge_prob) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn random_role_preserving_perm(rng: &mut StdRng, g: &SmallGraph) -> Permutation {
    let mut img: Vec<usize> = (0..g.n()).collect();
    for role in [
        Role::Centre,
        Role::Neighbour,
        Role::Boundary,
        Role::Colour,
        Role::Plain,
    ] {
        let positions: Vec<usize> = g.vertices_with_role(role).collect();
        let mut targets = positions.clone();
        targets.shuffle(rng);
        for (&from, &to) in positions.iter().zip(&targets) {
            img[from] = to;
        }
    }
    Permutation::from_images(img)
}

/// Canonical labelling on random roled graphs: the automorphism group
/// order must match brute force, and the canonical form must be invariant
/// under role-preserving relabelling.
fn canonical_labelling(_cache: &Cache) -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(0x0c17_c8ec);
    for _ in 0..60 {
        let n = rng.gen_range(2..=7);
        let g = random_graph(&mut rng, n, 0.45);
        let canon = canonicalize(&g);
        let brute = aut_order_brute(&g);
        if canon.aut_group().order() != brute {
            return Err(format!(
                "automorphism order mismatch on {g:?}: search {}, brute {brute}",
                canon.aut_group().order()
            ));
        }
        for _ in 0..4 {
            let p = random_role_preserving_perm(&mut rng, &g);
            if canonical_form(&g.relabel(&p)) != canon.graph {
                return Err(format!("canonical form not invariant on {g:?}"));
            }
        }
    }
    Ok(())
}

/// Symbolic coefficient tables for the degree-3 catalogue, evaluated at
/// concrete (q, t), must equal a direct colouring-by-colouring count that
/// shares no code with the symbolic pipeline.
fn symbolic_vs_direct(_cache: &Cache) -> Result<(), String> {
    let cat = generate_catalogue(3).map_err(|e| e.to_string())?;
    let t0 = rational(1, 2);
    for case in Case::ALL {
        let set = compute_coeff_set(&cat, case).map_err(|e| e.to_string())?;
        for q in [5i64, 7] {
            let Some(r_val) = case.r_for_q(q) else {
                continue;
            };
            let r0 = rational(r_val, 1);
            for (view, rec) in cat.views().iter().zip(set.records()) {
                if view.colour_count() > q as usize {
                    continue;
                }
                let direct = direct_coefficients(view, q as usize, &t0);
                if rec.ztilde().eval(&t0, &r0) != direct.ztilde
                    || rec.centre().eval(&t0, &r0) != direct.centre
                {
                    return Err(format!("case {case} disagrees with direct count at q={q}"));
                }
                for s in 0..rec.balance_count() {
                    if rec.balance(s).eval(&t0, &r0) != direct.balance[s] {
                        return Err(format!(
                            "case {case} balance {s} disagrees with direct count at q={q}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The claimed optimal view distribution must satisfy the energy and
/// balance constraints identically in (t, r), not just numerically.
fn k44_feasibility(cache: &Cache) -> Result<(), String> {
    let (cat, _) = cache
        .load_or_generate_catalogue(4)
        .map_err(|e| format!("{e:#}"))?;
    let (records, _) = cache
        .load_or_compute_coeffs(&cat, Case::MinQ5)
        .map_err(|e| format!("{e:#}"))?;
    check_k44_feasibility(&cat, &records).map_err(|e| e.to_string())
}

/// A catalogue file whose records were altered after hashing must fail
/// to parse, whatever else is consistent about it.
fn corrupt_catalogue_detected(_cache: &Cache) -> Result<(), String> {
    let cat = generate_catalogue(2).map_err(|e| e.to_string())?;
    let text = cat.to_text();
    let mangled = text.replacen("hash=", "hash=0000", 1);
    if Catalogue::from_text(&mangled).is_ok() {
        return Err("altered catalogue text was accepted".to_string());
    }
    Ok(())
}

/// A sign-flipped positivity multiplier must be rejected at load time.
fn tampered_multiplier_rejected(_cache: &Cache) -> Result<(), String> {
    for case in Case::ALL {
        let negated = format!("-{}", multiplier_source(case));
        if parse_multiplier(&negated).is_ok() {
            return Err(format!("negated multiplier for case {case} was accepted"));
        }
        if positivity_multiplier(case).is_err() {
            return Err(format!("genuine multiplier for case {case} failed to load"));
        }
    }
    Ok(())
}
